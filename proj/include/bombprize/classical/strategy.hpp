#pragma once

#include <vector>

#include "bombprize/classical/bit_channel.hpp"
#include "bombprize/game/game.hpp"
#include "bombprize/numkit/rational.hpp"

namespace bombprize::classical {

/// Encoder rows per configuration over messages 0..d-1; decoder rows per
/// message over boxes. Exact weights so the zero-prize results can be
/// asserted as literal zeros.
struct ClassicalStrategy {
  int d = 2;
  std::vector<std::vector<numkit::Rational>> enc;  // all_configs order, size 12 x d
  std::vector<std::array<numkit::Rational, 4>> dec;  // size d

  void validate() const;
};

/// Noiseless d-symbol channel.
game::ExactGameDistribution eval_classical(const ClassicalStrategy& s);

/// Through a noisy bit channel (d must be 2); float result.
game::GameDistribution eval_classical(const ClassicalStrategy& s, const BitChannel& ch);

struct SRStrategy {
  struct Component {
    numkit::Rational weight;
    ClassicalStrategy strategy;
  };
  std::vector<Component> components;
};

game::ExactGameDistribution eval_classical(const SRStrategy& s);

}  // namespace bombprize::classical
