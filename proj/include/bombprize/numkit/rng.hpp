#pragma once

#include <cstdint>

#include "bombprize/numkit/cmatrix.hpp"

namespace bombprize::numkit {

/// Counter-based splittable generator (splitmix64 core). All randomness in
/// the project flows through this so that a report seed reproduces it
/// byte-for-byte on any platform; no std::*_distribution is used anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t next_below(std::uint64_t n);  // [0, n)
  double next_double();                       // [0, 1), 53-bit
  double next_gaussian();                     // Box-Muller

  /// Independent child stream; the parent advances by one step.
  SplitMix64 split();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

CMatrix haar_unitary(std::size_t n, SplitMix64& rng);
CMatrix random_ket(std::size_t n, SplitMix64& rng);
CMatrix random_density(std::size_t n, SplitMix64& rng);

}  // namespace bombprize::numkit
