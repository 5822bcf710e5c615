#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bombprize/numkit/cmatrix.hpp"

namespace bombprize::qchannel {

using numkit::CMatrix;
using numkit::Complex;

/// Pauli operator by box label: 1 -> I, 2 -> X, 3 -> Y, 4 -> Z.
CMatrix pauli_op(int k);
/// Bell ket |Phi_k> = (pauli_op(k) (x) I)|Phi+>, k in 1..4.
CMatrix bell_ket(int k);
CMatrix bell_projector(int k);

struct PauliParams {
  double p_i = 0, p_x = 0, p_y = 0, p_z = 0;
  void validate() const;
  std::array<double, 4> as_array() const { return {p_i, p_x, p_y, p_z}; }
};

/// Orthonormal qubit basis {|psi0>, |psi1>}.
struct BasisPair {
  CMatrix ket0, ket1;  // 2x1 columns
  void validate() const;
};

BasisPair basis_x();
BasisPair basis_y();
BasisPair basis_z();
/// Eigenbasis of the k-th Pauli, k in 1..3 for X, Y, Z.
BasisPair pauli_eigenbasis(int k);

/// Measure in `basis`, reprepare sigma0 or sigma1 on the outcome.
struct CQChannel {
  BasisPair basis;
  CMatrix sigma0, sigma1;
  void validate() const;
};

/// Convex mixture of basis-flip channels. The quantum flag asks for at least
/// two components whose projector pairs differ.
struct NotMixture {
  struct Component {
    double weight;
    BasisPair basis;
  };
  std::vector<Component> components;
  void validate() const;
  bool is_quantum() const;
};

/// Qubit-to-qubit CPTP map held as a Kraus list; the Choi state
/// (I (x) N)(|Phi+><Phi+|) is cached at construction (trace 1, output factor
/// second).
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<CMatrix> kraus);

  const std::vector<CMatrix>& kraus() const { return kraus_; }
  const CMatrix& choi() const { return choi_; }

  /// Sum_k K rho K^dagger on a 2x2 state.
  CMatrix apply(const CMatrix& rho) const;
  /// (N (x) I) on a 4x4 state, channel acting on the first factor.
  CMatrix apply_to_first(const CMatrix& rho) const;
  /// (I (x) N) on a 4x4 state, channel acting on the second factor.
  CMatrix apply_to_second(const CMatrix& rho) const;

 private:
  std::vector<CMatrix> kraus_;
  CMatrix choi_;
};

QuantumChannel identity_channel();
QuantumChannel pauli(const PauliParams& p);
QuantumChannel unot();  // pauli(0, 1/3, 1/3, 1/3)
QuantumChannel cq(const CQChannel& c);
QuantumChannel cq_not(const BasisPair& basis);
QuantumChannel not_mixture(const NotMixture& m);
/// Kraus operators from the spectral decomposition of a trace-1 Choi state.
QuantumChannel channel_from_choi(const CMatrix& choi);

/// Exact in 2x2: positivity of the partially transposed Choi state.
bool is_entanglement_breaking(const QuantumChannel& ch);

/// Largest lambda in [0,1] with Choi(target) - lambda Choi(n) PSD, found by
/// bisection to 1e-9. Positive lambda means target = lambda n + (1-lambda) C
/// for some channel C; the residual renormalizes by linearity.
double max_degradation_weight(const QuantumChannel& n, const QuantumChannel& target);

inline constexpr double kDegradationThreshold = 1e-6;

bool is_not_channel(const QuantumChannel& ch);
bool is_quantum_not_channel(const QuantumChannel& ch);

/// Empirical average of U o ch o U^dagger over Haar samples, returned through
/// the averaged Choi state.
QuantumChannel twirl_monte_carlo(const QuantumChannel& ch, int samples, std::uint64_t seed);

}  // namespace bombprize::qchannel
