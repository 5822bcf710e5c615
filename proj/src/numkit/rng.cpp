#include "bombprize/numkit/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bombprize::numkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  return next() % n;
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

SplitMix64 SplitMix64::split() {
  return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL);
}

CMatrix random_ket(std::size_t n, SplitMix64& rng) {
  CMatrix v(n, 1);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z{rng.next_gaussian(), rng.next_gaussian()};
    v(i, 0) = z;
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < n; ++i) v(i, 0) *= inv;
  return v;
}

CMatrix haar_unitary(std::size_t n, SplitMix64& rng) {
  // Gram-Schmidt on a complex Gaussian matrix; the positive-diagonal R this
  // produces makes the Q factor Haar distributed.
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  CMatrix q(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g(i, col);
    for (std::size_t prev = 0; prev < col; ++prev) {
      Complex ip = 0.0;
      for (std::size_t i = 0; i < n; ++i) ip += std::conj(q(i, prev)) * g(i, col);
      for (std::size_t i = 0; i < n; ++i) v[i] -= ip * q(i, prev);
    }
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) q(i, col) = v[i] * inv;
  }
  return q;
}

CMatrix random_density(std::size_t n, SplitMix64& rng) {
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex{1.0 / tr, 0.0};
  return rho;
}

}  // namespace bombprize::numkit
