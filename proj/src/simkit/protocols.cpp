#include "bombprize/simkit/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "bombprize/numkit/entropy.hpp"
#include "bombprize/qchannel/capacity.hpp"

namespace bombprize::simkit {

using numkit::CMatrix;
using numkit::Complex;
using numkit::Rational;
using qchannel::QuantumChannel;

int trit_encode(int i, int b) {
  if (i < 1 || i > 3 || b < 1 || b > 4) throw std::invalid_argument("trit_encode: range");
  return (b == 1 || b == 1 + i) ? 1 : 0;
}

Rational trit_decode_prob(int j, int y, int m) {
  if (j < 1 || j > 3 || y < 1 || y > 4 || m < 0 || m > 1)
    throw std::invalid_argument("trit_decode_prob: range");
  const bool in_set = (y == 1 || y == 1 + j);
  if (m == 1 && !in_set) return Rational(1, 2);
  if (m == 0 && in_set) return Rational(1, 2);
  return Rational(0);
}

StrategyMatrix trit_branch(int i) {
  StrategyMatrix m;
  for (int b = 1; b <= 4; ++b)
    for (int y = 1; y <= 4; ++y) m.at(y, b) = trit_decode_prob(i, y, trit_encode(i, b));
  m.validate();
  return m;
}

StrategyMatrix trit_protocol_distribution() {
  StrategyMatrix avg;
  for (int i = 1; i <= 3; ++i) {
    const StrategyMatrix branch = trit_branch(i);
    for (int b = 1; b <= 4; ++b)
      for (int y = 1; y <= 4; ++y) avg.at(y, b) += Rational(1, 3) * branch.at(y, b);
  }
  avg.validate();
  return avg;
}

QuantumChannel unot_bit_branch(int basis) {
  return qchannel::cq_not(qchannel::pauli_eigenbasis(basis));
}

QuantumChannel unot_bit_simulation() {
  qchannel::NotMixture m;
  for (int i = 1; i <= 3; ++i)
    m.components.push_back({1.0 / 3.0, qchannel::pauli_eigenbasis(i)});
  return qchannel::not_mixture(m);
}

namespace {

double born_weight(const CMatrix& ket, const CMatrix& rho) {
  return ((ket.adjoint() * rho * ket)(0, 0)).real();
}

void check_input_state(const CMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2 || !rho.is_hermitian(1e-10) ||
      std::abs(rho.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("transcript sampler: input must be a qubit density matrix");
}

}  // namespace

Protocol2Transcript sample_unot_bit(const CMatrix& rho, numkit::SplitMix64& rng) {
  check_input_state(rho);
  const int i = static_cast<int>(rng.next_below(3)) + 1;
  const auto basis = qchannel::pauli_eigenbasis(i);
  const double p0 = born_weight(basis.ket0, rho);
  const int m = (rng.next_double() < p0) ? 0 : 1;
  const CMatrix& flipped = (m == 0) ? basis.ket1 : basis.ket0;
  return {i, m, numkit::outer(flipped, flipped)};
}

void CQMixture::validate() const {
  if (components.empty()) throw std::invalid_argument("CQMixture: empty");
  std::vector<double> w;
  for (const auto& c : components) {
    if (c.weight <= 0.0) throw std::invalid_argument("CQMixture: weights must be positive");
    w.push_back(c.weight);
    c.cq.validate();
  }
  if (!numkit::is_prob_vector(w)) throw std::invalid_argument("CQMixture: weights do not sum to 1");
}

QuantumChannel eb_simulation(const CQMixture& m) {
  m.validate();
  std::vector<CMatrix> kraus;
  for (const auto& comp : m.components) {
    const Complex s{std::sqrt(comp.weight), 0.0};
    const QuantumChannel base = qchannel::cq(comp.cq);
    for (const auto& k : base.kraus()) kraus.push_back(s * k);
  }
  return QuantumChannel(std::move(kraus));
}

Protocol3Transcript sample_eb(const CQMixture& m, const CMatrix& rho, numkit::SplitMix64& rng) {
  m.validate();
  check_input_state(rho);
  double u = rng.next_double();
  std::size_t i = 0;
  for (; i + 1 < m.components.size(); ++i) {
    if (u < m.components[i].weight) break;
    u -= m.components[i].weight;
  }
  const auto& comp = m.components[i];
  const double p0 = born_weight(comp.cq.basis.ket0, rho);
  const int outcome = (rng.next_double() < p0) ? 0 : 1;
  return {static_cast<int>(i) + 1, outcome, outcome == 0 ? comp.cq.sigma0 : comp.cq.sigma1};
}

RuskaiReport noisy_ruskai_check(const CQMixture& m) {
  m.validate();
  const QuantumChannel mixture = eb_simulation(m);
  if (!qchannel::is_quantum_not_channel(mixture))
    throw std::invalid_argument("noisy_ruskai_check: mixture is not a quantum basis-flip channel");

  RuskaiReport report;
  report.components_all_unit = true;
  for (const auto& comp : m.components) {
    const double purity0 = (comp.cq.sigma0 * comp.cq.sigma0).trace().real();
    const double purity1 = (comp.cq.sigma1 * comp.cq.sigma1).trace().real();
    const double overlap = (comp.cq.sigma0 * comp.cq.sigma1).trace().real();
    double capacity;
    if (std::abs(purity0 - 1.0) < 1e-9 && std::abs(purity1 - 1.0) < 1e-9 &&
        std::abs(overlap) < 1e-9) {
      capacity = 1.0;  // orthogonal pure outputs relay the bit losslessly
    } else {
      capacity = qchannel::ce_numerical(qchannel::cq(comp.cq));
    }
    report.component_capacities.push_back(capacity);
    if (std::abs(capacity - 1.0) > 1e-6) report.components_all_unit = false;
  }
  report.mixture_capacity = qchannel::ce_numerical(mixture);
  report.mixture_below_unit = report.mixture_capacity < 1.0;
  return report;
}

}  // namespace bombprize::simkit
