#pragma once

#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/channel.hpp"

namespace bombprize::qchannel {

BasisPair random_basis(numkit::SplitMix64& rng);
PauliParams random_pauli_params(numkit::SplitMix64& rng);
NotMixture random_not_mixture(numkit::SplitMix64& rng, int min_components = 1,
                              int max_components = 4);

}  // namespace bombprize::qchannel
