#pragma once

#include <vector>

#include "bombprize/qchannel/channel.hpp"

namespace bombprize::qchannel {

/// Closed form 2 + sum_a p_a log2 p_a.
double ce_pauli(const PauliParams& p);

/// 2 log2 d - H(lambda) for a Bell-diagonal channel on dimension d; lambda
/// must have d^2 entries.
double ce_bell_diagonal(const std::vector<double>& lambda, int d);

/// Input-output quantum mutual information S(rho) + S(N(rho)) - S((N (x) I) psi_rho)
/// through a canonical spectral purification.
double mutual_information(const QuantumChannel& ch, const CMatrix& rho);

struct CeSearchOptions {
  int radial = 20;
  int polar = 18;
  int azimuthal = 36;
  double refine_step = 1e-4;
};

/// Entanglement-assisted capacity by Bloch-ball grid search plus local
/// coordinate refinement.
double ce_numerical(const QuantumChannel& ch, const CeSearchOptions& opts = {});

}  // namespace bombprize::qchannel
