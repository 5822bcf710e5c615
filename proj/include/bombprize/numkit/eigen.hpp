#pragma once

#include <vector>

#include "bombprize/numkit/cmatrix.hpp"

namespace bombprize::numkit {

/// Eigenvalues below -kPsdTolerance disqualify a matrix from being PSD.
inline constexpr double kPsdTolerance = 1e-10;

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi; throws on
/// non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k pairs with values[k]
};

EigenSystem hermitian_eigensystem(const CMatrix& m);

double min_eigenvalue(const CMatrix& m);
bool is_psd(const CMatrix& m, double tol = kPsdTolerance);

}  // namespace bombprize::numkit
