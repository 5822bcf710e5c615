#include "bombprize/classical/adversary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "bombprize/game/game.hpp"
#include "bombprize/numkit/rng.hpp"

namespace bombprize::classical {

double adversarial_bomb_search(const BitChannel& ch, int restarts, std::uint64_t seed) {
  ch.validate();
  if (restarts < 1) throw std::invalid_argument("adversarial_bomb_search: restarts must be >= 1");

  // Deterministic decoders g = (g0, g1), boxes opened on message 0 / 1.
  // With the decoder fixed, Alice's best reply for a bomb at b is the input
  // minimising the probability that the opened box is b; that value depends
  // only on b, so the whole search is a 4 x 16 matrix game over decoder
  // mixtures.
  std::array<std::array<double, 4>, 16> cost{};
  for (int g0 = 0; g0 < 4; ++g0)
    for (int g1 = 0; g1 < 4; ++g1) {
      const int g = g0 * 4 + g1;
      for (int b = 0; b < 4; ++b) {
        double worst = 1.0;
        for (int m = 0; m < 2; ++m) {
          double hit = 0.0;
          if (g0 == b) hit += ch.p[0][m];
          if (g1 == b) hit += ch.p[1][m];
          worst = std::min(worst, hit);
        }
        cost[g][b] = worst;
      }
    }

  const auto mixture_value = [&](const std::array<double, 16>& w) {
    double value = 0.0;
    for (int b = 0; b < 4; ++b) {
      double f = 0.0;
      for (int g = 0; g < 16; ++g) f += w[g] * cost[g][b];
      value = std::max(value, f);
    }
    return value;
  };

  numkit::SplitMix64 rng(seed);
  double best = 1.0;
  for (int r = 0; r < restarts; ++r) {
    std::array<double, 16> w{};
    double norm = 0.0;
    for (double& x : w) {
      x = rng.next_double() + 1e-3;
      norm += x;
    }
    for (double& x : w) x /= norm;
    best = std::min(best, mixture_value(w));

    // multiplicative weights on the dealer side, decoder best responses;
    // the dealer's initial weights vary per restart
    std::array<double, 4> z{};
    double zsum = 0.0;
    for (double& x : z) {
      x = rng.next_double() + 0.05;
      zsum += x;
    }
    for (double& x : z) x /= zsum;
    std::array<double, 16> avg{};
    const int iters = 4000;
    const double eta = 0.5;
    for (int t = 0; t < iters; ++t) {
      int g_best = 0;
      double g_val = 1e9;
      for (int g = 0; g < 16; ++g) {
        double v = 0.0;
        for (int b = 0; b < 4; ++b) v += z[b] * cost[g][b];
        if (v < g_val) {
          g_val = v;
          g_best = g;
        }
      }
      avg[g_best] += 1.0;
      double zn = 0.0;
      for (int b = 0; b < 4; ++b) {
        z[b] *= std::exp(eta * cost[g_best][b]);
        zn += z[b];
      }
      for (int b = 0; b < 4; ++b) z[b] /= zn;
    }
    for (double& x : avg) x /= iters;
    best = std::min(best, mixture_value(avg));
  }

  const double floor = game::theorem1_bound(symmetrized_capacity(ch).capacity);
  if (best < floor - 1e-12)
    throw std::logic_error("adversarial_bomb_search: capacity lower bound violated");
  return best;
}

}  // namespace bombprize::classical
