#include "bombprize/qchannel/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "bombprize/numkit/eigen.hpp"
#include "bombprize/numkit/entropy.hpp"
#include "bombprize/numkit/rng.hpp"

namespace bombprize::qchannel {

using numkit::hermitian_eigensystem;
using numkit::is_psd;
using numkit::kPsdTolerance;
using numkit::outer;
using numkit::partial_trace;
using numkit::partial_transpose;
using numkit::Subsystem;
using numkit::tensor;

CMatrix pauli_op(int k) {
  switch (k) {
    case 1: return numkit::pauli_i();
    case 2: return numkit::pauli_x();
    case 3: return numkit::pauli_y();
    case 4: return numkit::pauli_z();
    default: throw std::invalid_argument("pauli_op: label must be 1..4");
  }
}

CMatrix bell_ket(int k) {
  CMatrix phi(4, 1);
  phi(0, 0) = 1.0 / std::sqrt(2.0);
  phi(3, 0) = 1.0 / std::sqrt(2.0);
  return tensor(pauli_op(k), CMatrix::identity(2)) * phi;
}

CMatrix bell_projector(int k) {
  const CMatrix v = bell_ket(k);
  return outer(v, v);
}

void PauliParams::validate() const {
  if (!numkit::is_prob_vector({p_i, p_x, p_y, p_z}))
    throw std::invalid_argument("PauliParams: weights are not a probability vector");
}

void BasisPair::validate() const {
  if (ket0.rows() != 2 || ket0.cols() != 1 || ket1.rows() != 2 || ket1.cols() != 1)
    throw std::invalid_argument("BasisPair: kets must be 2x1");
  const auto ip = [](const CMatrix& a, const CMatrix& b) { return (a.adjoint() * b)(0, 0); };
  if (std::abs(ip(ket0, ket0) - Complex{1.0, 0.0}) > 1e-12 ||
      std::abs(ip(ket1, ket1) - Complex{1.0, 0.0}) > 1e-12 ||
      std::abs(ip(ket0, ket1)) > 1e-12)
    throw std::invalid_argument("BasisPair: kets are not orthonormal");
}

BasisPair basis_z() { return {numkit::basis_ket(2, 0), numkit::basis_ket(2, 1)}; }

BasisPair basis_x() {
  const double s = 1.0 / std::sqrt(2.0);
  return {CMatrix(2, 1, {s, s}), CMatrix(2, 1, {s, -s})};
}

BasisPair basis_y() {
  const double s = 1.0 / std::sqrt(2.0);
  return {CMatrix(2, 1, {s, Complex{0, 1} * s}), CMatrix(2, 1, {s, Complex{0, -1} * s})};
}

BasisPair pauli_eigenbasis(int k) {
  switch (k) {
    case 1: return basis_x();
    case 2: return basis_y();
    case 3: return basis_z();
    default: throw std::invalid_argument("pauli_eigenbasis: label must be 1..3");
  }
}

void CQChannel::validate() const {
  basis.validate();
  const auto check_state = [](const CMatrix& s, const char* what) {
    if (s.rows() != 2 || s.cols() != 2 || !s.is_hermitian(1e-10) ||
        std::abs(s.trace().real() - 1.0) > 1e-10 || !is_psd(s))
      throw std::invalid_argument(std::string("CQChannel: ") + what + " is not a density matrix");
  };
  check_state(sigma0, "sigma0");
  check_state(sigma1, "sigma1");
}

void NotMixture::validate() const {
  if (components.empty()) throw std::invalid_argument("NotMixture: empty");
  std::vector<double> w;
  for (const auto& c : components) {
    if (c.weight <= 0.0) throw std::invalid_argument("NotMixture: weights must be positive");
    w.push_back(c.weight);
    c.basis.validate();
  }
  if (!numkit::is_prob_vector(w))
    throw std::invalid_argument("NotMixture: weights do not sum to 1");
}

namespace {

bool same_projector_pair(const BasisPair& a, const BasisPair& b) {
  const CMatrix a0 = outer(a.ket0, a.ket0), a1 = outer(a.ket1, a.ket1);
  const CMatrix b0 = outer(b.ket0, b.ket0), b1 = outer(b.ket1, b.ket1);
  const double direct = numkit::distance_frobenius(a0, b0) + numkit::distance_frobenius(a1, b1);
  const double crossed = numkit::distance_frobenius(a0, b1) + numkit::distance_frobenius(a1, b0);
  return std::min(direct, crossed) < 1e-9;
}

CMatrix choi_of_kraus(const std::vector<CMatrix>& kraus) {
  // (I (x) N)(|Phi+><Phi+|) = sum_k |v_k><v_k| with v_k = (I (x) K)|Phi+>.
  CMatrix choi(4, 4);
  for (const auto& k : kraus) {
    CMatrix v(4, 1);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t q = 0; q < 2; ++q) v(a * 2 + q, 0) = k(q, a) / std::sqrt(2.0);
    choi += outer(v, v);
  }
  return choi;
}

}  // namespace

bool NotMixture::is_quantum() const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!same_projector_pair(components[i].basis, components[j].basis)) return true;
  return false;
}

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("QuantumChannel: no Kraus operators");
  CMatrix sum(2, 2);
  for (const auto& k : kraus_) {
    if (k.rows() != 2 || k.cols() != 2)
      throw std::invalid_argument("QuantumChannel: Kraus operators must be 2x2");
    sum += k.adjoint() * k;
  }
  if (numkit::distance_frobenius(sum, CMatrix::identity(2)) > 1e-10)
    throw std::invalid_argument("QuantumChannel: Kraus operators are not trace preserving");
  choi_ = choi_of_kraus(kraus_);
}

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw std::invalid_argument("QuantumChannel::apply: state must be 2x2");
  CMatrix out(2, 2);
  for (const auto& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

CMatrix QuantumChannel::apply_to_first(const CMatrix& rho) const {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("QuantumChannel::apply_to_first: state must be 4x4");
  CMatrix out(4, 4);
  for (const auto& k : kraus_) {
    const CMatrix lifted = tensor(k, CMatrix::identity(2));
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

CMatrix QuantumChannel::apply_to_second(const CMatrix& rho) const {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("QuantumChannel::apply_to_second: state must be 4x4");
  CMatrix out(4, 4);
  for (const auto& k : kraus_) {
    const CMatrix lifted = tensor(CMatrix::identity(2), k);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

QuantumChannel identity_channel() { return QuantumChannel({CMatrix::identity(2)}); }

QuantumChannel pauli(const PauliParams& p) {
  p.validate();
  std::vector<CMatrix> kraus;
  const auto w = p.as_array();
  for (int k = 1; k <= 4; ++k) {
    if (w[k - 1] == 0.0) continue;
    kraus.push_back(Complex{std::sqrt(w[k - 1]), 0.0} * pauli_op(k));
  }
  if (kraus.empty()) throw std::invalid_argument("pauli: all weights zero");
  return QuantumChannel(std::move(kraus));
}

QuantumChannel unot() { return pauli({0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}); }

QuantumChannel cq(const CQChannel& c) {
  c.validate();
  std::vector<CMatrix> kraus;
  const auto add = [&kraus](const CMatrix& sigma, const CMatrix& bra_ket) {
    const auto es = hermitian_eigensystem(sigma);
    for (std::size_t k = 0; k < 2; ++k) {
      const double lam = std::max(0.0, es.values[k]);
      if (lam < 1e-14) continue;
      CMatrix v(2, 1);
      v(0, 0) = es.vectors(0, k);
      v(1, 0) = es.vectors(1, k);
      kraus.push_back(Complex{std::sqrt(lam), 0.0} * outer(v, bra_ket));
    }
  };
  add(c.sigma0, c.basis.ket0);
  add(c.sigma1, c.basis.ket1);
  return QuantumChannel(std::move(kraus));
}

QuantumChannel cq_not(const BasisPair& basis) {
  basis.validate();
  return QuantumChannel({outer(basis.ket1, basis.ket0), outer(basis.ket0, basis.ket1)});
}

QuantumChannel not_mixture(const NotMixture& m) {
  m.validate();
  std::vector<CMatrix> kraus;
  for (const auto& c : m.components) {
    const Complex s{std::sqrt(c.weight), 0.0};
    kraus.push_back(s * outer(c.basis.ket1, c.basis.ket0));
    kraus.push_back(s * outer(c.basis.ket0, c.basis.ket1));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel channel_from_choi(const CMatrix& choi) {
  if (choi.rows() != 4 || choi.cols() != 4)
    throw std::invalid_argument("channel_from_choi: Choi state must be 4x4");
  if (!choi.is_hermitian(1e-9))
    throw std::invalid_argument("channel_from_choi: Choi state must be Hermitian");
  if (std::abs(choi.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("channel_from_choi: Choi state must have trace 1");
  const auto es = hermitian_eigensystem(choi);
  if (es.values.front() < -kPsdTolerance)
    throw std::invalid_argument("channel_from_choi: Choi state is not PSD");
  std::vector<CMatrix> kraus;
  for (std::size_t k = 0; k < 4; ++k) {
    const double lam = es.values[k];
    if (lam < 1e-12) continue;
    CMatrix op(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t q = 0; q < 2; ++q)
        op(q, a) = std::sqrt(2.0 * lam) * es.vectors(a * 2 + q, k);
    kraus.push_back(std::move(op));
  }
  return QuantumChannel(std::move(kraus));
}

bool is_entanglement_breaking(const QuantumChannel& ch) {
  return is_psd(partial_transpose(ch.choi(), 2, 2, Subsystem::A));
}

double max_degradation_weight(const QuantumChannel& n, const QuantumChannel& target) {
  const CMatrix& cn = n.choi();
  const CMatrix& ct = target.choi();
  const auto feasible = [&](double lam) {
    CMatrix d = ct;
    d -= Complex{lam, 0.0} * cn;
    return is_psd(d);
  };
  if (feasible(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

bool is_not_channel(const QuantumChannel& ch) {
  return is_entanglement_breaking(ch) &&
         max_degradation_weight(ch, unot()) > kDegradationThreshold;
}

bool is_quantum_not_channel(const QuantumChannel& ch) {
  return is_not_channel(ch) && max_degradation_weight(unot(), ch) > kDegradationThreshold;
}

QuantumChannel twirl_monte_carlo(const QuantumChannel& ch, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("twirl_monte_carlo: samples must be >= 1");
  numkit::SplitMix64 rng(seed);
  CMatrix acc(4, 4);
  for (int s = 0; s < samples; ++s) {
    const CMatrix u = numkit::haar_unitary(2, rng);
    std::vector<CMatrix> conj;
    conj.reserve(ch.kraus().size());
    for (const auto& k : ch.kraus()) conj.push_back(u * k * u.adjoint());
    acc += choi_of_kraus(conj);
  }
  acc *= Complex{1.0 / samples, 0.0};
  return channel_from_choi(acc);
}

}  // namespace bombprize::qchannel
