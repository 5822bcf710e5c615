#include "bombprize/numkit/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace bombprize::numkit {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), a_(entries) {
  if (a_.size() != rows * cols) throw std::invalid_argument("CMatrix: entry count mismatch");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Complex CMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("CMatrix::trace: not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: product shape mismatch");
  CMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix basis_ket(std::size_t dim, std::size_t k) {
  if (k >= dim) throw std::invalid_argument("basis_ket: index out of range");
  CMatrix v(dim, 1);
  v(k, 0) = 1.0;
  return v;
}

CMatrix outer(const CMatrix& v, const CMatrix& w) {
  if (v.cols() != 1 || w.cols() != 1) throw std::invalid_argument("outer: expected column vectors");
  CMatrix m(v.rows(), w.rows());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < w.rows(); ++j) m(i, j) = v(i, 0) * std::conj(w(j, 0));
  return m;
}

CMatrix pauli_i() { return CMatrix::identity(2); }
CMatrix pauli_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }
CMatrix pauli_y() { return CMatrix(2, 2, {0, Complex{0, -1}, Complex{0, 1}, 0}); }
CMatrix pauli_z() { return CMatrix(2, 2, {1, 0, 0, -1}); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex f = a(ia, ja);
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return m;
}

static void check_bipartite(const CMatrix& m, std::size_t da, std::size_t db) {
  if (!m.is_square() || m.rows() != da * db)
    throw std::invalid_argument("bipartite op: dimension mismatch");
}

CMatrix partial_trace(const CMatrix& m, std::size_t da, std::size_t db, Subsystem keep) {
  check_bipartite(m, da, db);
  if (keep == Subsystem::A) {
    CMatrix r(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k) r(i, j) += m(i * db + k, j * db + k);
    return r;
  }
  CMatrix r(db, db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k) r(i, j) += m(k * db + i, k * db + j);
  return r;
}

CMatrix partial_transpose(const CMatrix& m, std::size_t da, std::size_t db, Subsystem which) {
  check_bipartite(m, da, db);
  CMatrix r(da * db, da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ib = 0; ib < db; ++ib)
      for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t jb = 0; jb < db; ++jb) {
          if (which == Subsystem::A)
            r(ja * db + ib, ia * db + jb) = m(ia * db + ib, ja * db + jb);
          else
            r(ia * db + jb, ja * db + ib) = m(ia * db + ib, ja * db + jb);
        }
  return r;
}

double distance_frobenius(const CMatrix& a, const CMatrix& b) {
  CMatrix d = a;
  d -= b;
  return d.frobenius_norm();
}

}  // namespace bombprize::numkit
