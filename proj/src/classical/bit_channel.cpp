#include "bombprize/classical/bit_channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bombprize/numkit/entropy.hpp"

namespace bombprize::classical {

BitChannel BitChannel::identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

BitChannel BitChannel::bsc(double eps) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("bsc: eps outside [0,1]");
  return {{{{1.0 - eps, eps}, {eps, 1.0 - eps}}}};
}

void BitChannel::validate() const {
  for (int m = 0; m < 2; ++m) {
    double sum = 0.0;
    for (int n = 0; n < 2; ++n) {
      if (p[n][m] < -1e-12 || p[n][m] > 1.0 + 1e-12)
        throw std::invalid_argument("BitChannel: entry outside [0,1]");
      sum += p[n][m];
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("BitChannel: column does not sum to 1");
  }
}

double ambiguous_probability(const BitChannel& ch) {
  ch.validate();
  double best = 0.0;
  for (int out = 0; out < 2; ++out) best = std::max(best, std::min(ch.p[out][0], ch.p[out][1]));
  return best;
}

SymmetrizedCapacity symmetrized_capacity(const BitChannel& ch) {
  ch.validate();
  const double p00 = 0.5 * (ch.p[0][0] + ch.p[1][1]);
  const double p10 = 0.5 * (ch.p[1][0] + ch.p[0][1]);
  const double p_sym = std::min(p00, p10);
  const SymmetrizedCapacity out{p_sym, 1.0 - numkit::binary_entropy(p_sym)};
  if (ambiguous_probability(ch) < p_sym - 1e-12)
    throw std::logic_error("symmetrized_capacity: p_? >= p_sym violated");
  return out;
}

}  // namespace bombprize::classical
