#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bombprize/classical/strategy.hpp"
#include "bombprize/game/game.hpp"
#include "bombprize/numkit/rng.hpp"

namespace bombprize::classical {

struct Theorem2Report {
  int d = 0;
  std::uint64_t decodings = 0;
  std::uint64_t encodings_considered = 0;      // d^12 per decoding
  std::uint64_t bomb_avoiding = 0;             // deterministic pairs with worst_bomb = 0
  std::uint64_t prize_certain = 0;             // among those, pairs with worst_prize = 1
  int stochastic_samples = 0;
  int stochastic_failures = 0;                 // sampled strategies with nonzero worst prize/bomb
  bool pass() const { return prize_certain == 0 && stochastic_failures == 0; }
};

/// Per-decoding progress callback for streaming reports (may be empty).
using DecodingCallback =
    std::function<void(const std::vector<int>& decoding, std::uint64_t bomb_avoiding,
                       std::uint64_t prize_certain)>;

/// Enumerates every deterministic strategy with a noiseless d-symbol channel
/// (encodings over the 12 configurations, decodings over messages), visits
/// each bomb-avoiding one and records whether it ever finds the prize with
/// certainty; then samples support-constrained stochastic bomb-avoiding
/// strategies and asserts their exact zeros. d must be 2 or 3.
Theorem2Report enumerate_theorem2(int d, int stochastic_samples, std::uint64_t seed,
                                  const DecodingCallback& cb = {});

/// Support-constrained sampler: decoder supports with empty overall
/// intersection, encoder rows restricted to messages avoiding the bomb.
ClassicalStrategy sample_bomb_avoiding_strategy(int d, numkit::SplitMix64& rng);

/// The d = 4 strategy that transmits the prize location outright.
ClassicalStrategy send_prize_strategy();

/// A configuration (b, x) that every bomb-avoiding strategy whose decoder
/// supports are the given box sets loses: p(x|b,x) = 0. The supports must
/// be nonempty with empty overall intersection; at most 3 of them.
game::GameConfig zero_prize_witness(const std::vector<std::vector<int>>& supports);

}  // namespace bombprize::classical
