#pragma once

#include <cstdint>

#include "bombprize/classical/bit_channel.hpp"

namespace bombprize::classical {

/// Smallest worst-case bomb probability found over shared-randomness
/// strategies on the given bit channel. Alternating structure: encoders are
/// exact per-configuration best responses, decoders are mixed over the 16
/// deterministic choices by multiplicative-weight updates, restarted from
/// random initial decoder weights. The returned value is always achieved by
/// a concrete strategy mixture and is checked against the capacity lower
/// bound before returning.
double adversarial_bomb_search(const BitChannel& ch, int restarts, std::uint64_t seed);

}  // namespace bombprize::classical
