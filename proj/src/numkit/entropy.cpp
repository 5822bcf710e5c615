#include "bombprize/numkit/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "bombprize/numkit/eigen.hpp"

namespace bombprize::numkit {

bool is_prob_vector(const std::vector<double>& w, double tol) {
  double sum = 0.0;
  for (double x : w) {
    if (x < -tol || x > 1.0 + tol) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= tol;
}

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) throw std::invalid_argument("binary_entropy: p outside [0,1]");
  p = std::min(1.0, std::max(0.0, p));
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double shannon_entropy(const std::vector<double>& p) {
  if (!is_prob_vector(p)) throw std::invalid_argument("shannon_entropy: not a probability vector");
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
  double h = 0.0;
  for (double lam : eigenvalues)
    if (lam > 0.0) h -= lam * std::log2(lam);
  return h;
}

double vn_entropy(const CMatrix& rho) {
  if (!rho.is_square()) throw std::invalid_argument("vn_entropy: not square");
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("vn_entropy: not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
    throw std::invalid_argument("vn_entropy: trace is not 1");
  const auto lam = hermitian_eigenvalues(rho);
  if (lam.front() < -kPsdTolerance) throw std::invalid_argument("vn_entropy: not PSD");
  return entropy_of_spectrum(lam);
}

}  // namespace bombprize::numkit
