#pragma once

#include <vector>

#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/channel.hpp"
#include "bombprize/simkit/strategy_matrix.hpp"

namespace bombprize::simkit {

// --- one bit + two correlated trits: simulating the 4-box flip table ---

/// Alice's encoding bit for trit value i in 1..3: 1 iff b sits in {1, 1+i}.
int trit_encode(int i, int b);
/// Bob's decoder weight p(y|m) for trit value j.
numkit::Rational trit_decode_prob(int j, int y, int m);
/// Conditional table for matched trits i = j.
StrategyMatrix trit_branch(int i);
/// Uniform average over matched trit values; equals classical_not() exactly.
StrategyMatrix trit_protocol_distribution();

// --- one bit + two correlated trits: simulating the universal flip channel ---

/// Measure in the i-th Pauli eigenbasis, send the outcome, prepare the
/// orthogonal basis state. The uniform average over i is returned as a
/// channel.
qchannel::QuantumChannel unot_bit_simulation();

struct Protocol2Transcript {
  int basis;            // shared trit value 1..3 (X, Y, Z)
  int outcome;          // Alice's measurement outcome 0/1
  numkit::CMatrix prepared;  // the state Bob prepares
};

Protocol2Transcript sample_unot_bit(const numkit::CMatrix& rho, numkit::SplitMix64& rng);

/// The fixed-trit branch channel (a single basis flip).
qchannel::QuantumChannel unot_bit_branch(int basis);

// --- one bit + shared randomness: simulating measure-and-prepare channels ---

struct CQMixture {
  struct Component {
    double weight;
    qchannel::CQChannel cq;
  };
  std::vector<Component> components;
  void validate() const;
};

/// The averaged measure-and-prepare channel of the mixture.
qchannel::QuantumChannel eb_simulation(const CQMixture& m);

struct Protocol3Transcript {
  int component;  // shared value i, 1-based
  int outcome;    // measured bit
  numkit::CMatrix prepared;
};

Protocol3Transcript sample_eb(const CQMixture& m, const numkit::CMatrix& rho,
                              numkit::SplitMix64& rng);

// --- mixtures of unit-capacity pieces with sub-unit total capacity ---

struct RuskaiReport {
  std::vector<double> component_capacities;  // exactly 1 for orthogonal pure outputs
  double mixture_capacity;                   // numerical entanglement-assisted capacity
  bool components_all_unit = false;
  bool mixture_below_unit = false;
};

/// Requires the mixture channel to pass is_quantum_not_channel; reports each
/// positive-weight component's capacity next to the capacity of the mixture.
RuskaiReport noisy_ruskai_check(const CQMixture& m);

}  // namespace bombprize::simkit
