#pragma once

#include <vector>

#include "bombprize/numkit/cmatrix.hpp"

namespace bombprize::numkit {

// All entropies in bits; 0 log 0 := 0 throughout.

bool is_prob_vector(const std::vector<double>& w, double tol = 1e-12);

double binary_entropy(double p);
double shannon_entropy(const std::vector<double>& p);

/// Base-2 von Neumann entropy. Input must be a density matrix (Hermitian,
/// PSD and unit trace within 1e-10).
double vn_entropy(const CMatrix& rho);

/// Entropy of the clipped spectrum of a Hermitian matrix; no density check.
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

}  // namespace bombprize::numkit
