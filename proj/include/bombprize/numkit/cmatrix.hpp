#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bombprize::numkit {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Everything in this project is at most
/// 4x4, so no effort is spent on blocking or sparsity.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> a_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);

/// Column vector |k> in dimension dim.
CMatrix basis_ket(std::size_t dim, std::size_t k);
/// |v><w| for column vectors v, w.
CMatrix outer(const CMatrix& v, const CMatrix& w);

CMatrix pauli_i();
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

enum class Subsystem { A, B };

/// Kronecker product; index convention (iA*dimB + iB).
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Trace out the factor NOT named by `keep` of a (dimA*dimB)-square matrix.
CMatrix partial_trace(const CMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem keep);

/// Transpose only the factor named by `which`. Involutive.
CMatrix partial_transpose(const CMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem which);

double distance_frobenius(const CMatrix& a, const CMatrix& b);

}  // namespace bombprize::numkit
