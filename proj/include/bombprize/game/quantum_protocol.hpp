#pragma once

#include <cstdint>
#include <vector>

#include "bombprize/game/game.hpp"
#include "bombprize/qchannel/channel.hpp"

namespace bombprize::game {

/// A full two-qubit protocol: shared state on A (x) B, per-configuration
/// encodings A -> Q, the transmission channel on Q, and a four-outcome POVM
/// on Q (x) B. Encodings may be stored per bomb position (4 entries) or per
/// configuration (12 entries, all_configs order).
struct QuantumProtocolSpec {
  numkit::CMatrix shared_state;  // 4x4 density matrix
  std::vector<qchannel::QuantumChannel> encodings;
  qchannel::QuantumChannel channel;
  std::array<numkit::CMatrix, 4> povm;  // outcome y = index + 1

  const qchannel::QuantumChannel& encoding(int b, int x) const;
  void validate() const;  // density matrix, POVM completeness within 1e-10
};

/// p(y|b,x) = Tr[ M_y (N E_{b,x} (x) I)(rho_AB) ].
GameDistribution eval_quantum_protocol(const QuantumProtocolSpec& spec);

/// Shared |Phi+>, bomb label encoded by the matching Pauli gate, canonical
/// Bell-projector readout.
QuantumProtocolSpec dense_coding_protocol(const qchannel::QuantumChannel& n);

/// Seeded protocol batch used for the worst-prize bound checks. Half of the
/// batch is generic (random entangled state, Haar encodings, random POVM) and
/// essentially never bomb-avoiding; the other half randomises the dense-coding
/// family (random basis-flip mixture channel, random local frames, random box
/// relabelling) and is bomb-avoiding by construction. Rejection at the
/// evaluation stage does the filtering.
std::vector<QuantumProtocolSpec> sample_two_qubit_protocols(std::uint64_t seed, int count);

}  // namespace bombprize::game
