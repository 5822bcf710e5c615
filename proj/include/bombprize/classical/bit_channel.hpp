#pragma once

#include <array>

namespace bombprize::classical {

/// Binary channel; p[m_out][m_in], columns sum to 1.
struct BitChannel {
  std::array<std::array<double, 2>, 2> p{};

  static BitChannel identity();
  static BitChannel bsc(double eps);
  void validate() const;
};

/// max over outputs of the min over inputs of p(out|in); zero exactly for the
/// two permutation channels, positive otherwise.
double ambiguous_probability(const BitChannel& ch);

struct SymmetrizedCapacity {
  double p_sym;
  double capacity;  // 1 - H2(p_sym)
};

/// Capacity of the symmetrised channel; checks the p_? >= p_sym inequality
/// on the way out.
SymmetrizedCapacity symmetrized_capacity(const BitChannel& ch);

}  // namespace bombprize::classical
