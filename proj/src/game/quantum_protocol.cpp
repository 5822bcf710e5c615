#include "bombprize/game/quantum_protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "bombprize/numkit/eigen.hpp"
#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/random.hpp"

namespace bombprize::game {

using numkit::CMatrix;
using numkit::Complex;
using numkit::SplitMix64;
using qchannel::QuantumChannel;

const QuantumChannel& QuantumProtocolSpec::encoding(int b, int x) const {
  if (!valid_config(b, x)) throw std::out_of_range("encoding: invalid (b, x)");
  if (encodings.size() == 4) return encodings[b - 1];
  if (encodings.size() == 12) {
    const auto& configs = all_configs();
    for (std::size_t i = 0; i < configs.size(); ++i)
      if (configs[i].bomb == b && configs[i].prize == x) return encodings[i];
  }
  throw std::logic_error("encoding: expected 4 or 12 entries");
}

void QuantumProtocolSpec::validate() const {
  if (shared_state.rows() != 4 || shared_state.cols() != 4 || !shared_state.is_hermitian(1e-10) ||
      std::abs(shared_state.trace().real() - 1.0) > 1e-10 || !numkit::is_psd(shared_state))
    throw std::invalid_argument("QuantumProtocolSpec: shared state is not a density matrix");
  if (encodings.size() != 4 && encodings.size() != 12)
    throw std::invalid_argument("QuantumProtocolSpec: expected 4 or 12 encodings");
  CMatrix sum(4, 4);
  for (const auto& m : povm) {
    if (m.rows() != 4 || m.cols() != 4 || !m.is_hermitian(1e-10) || !numkit::is_psd(m, 1e-8))
      throw std::invalid_argument("QuantumProtocolSpec: POVM element is not PSD Hermitian 4x4");
    sum += m;
  }
  if (numkit::distance_frobenius(sum, CMatrix::identity(4)) > 1e-10)
    throw std::invalid_argument("QuantumProtocolSpec: POVM is not complete");
}

GameDistribution eval_quantum_protocol(const QuantumProtocolSpec& spec) {
  spec.validate();
  GameDistribution d;
  for (const auto& c : all_configs()) {
    const CMatrix encoded = spec.encoding(c.bomb, c.prize).apply_to_first(spec.shared_state);
    const CMatrix received = spec.channel.apply_to_first(encoded);
    double sum = 0.0;
    for (int y = 1; y <= 4; ++y) {
      const double p = (spec.povm[y - 1] * received).trace().real();
      d.prob(c.bomb, c.prize, y) = p;
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw std::logic_error("eval_quantum_protocol: outcome row not normalized");
  }
  return d;
}

QuantumProtocolSpec dense_coding_protocol(const QuantumChannel& n) {
  QuantumProtocolSpec spec{qchannel::bell_projector(1),
                           {},
                           n,
                           {qchannel::bell_projector(1), qchannel::bell_projector(2),
                            qchannel::bell_projector(3), qchannel::bell_projector(4)}};
  for (int b = 1; b <= 4; ++b) spec.encodings.push_back(QuantumChannel({qchannel::pauli_op(b)}));
  return spec;
}

namespace {

CMatrix random_entangled_state(SplitMix64& rng) {
  for (;;) {
    const CMatrix ket = numkit::random_ket(4, rng);
    const CMatrix rho = numkit::outer(ket, ket);
    const CMatrix marginal = numkit::partial_trace(rho, 2, 2, numkit::Subsystem::A);
    if (numkit::min_eigenvalue(marginal) > 0.05) return rho;
  }
}

std::array<CMatrix, 4> random_povm(SplitMix64& rng) {
  std::array<CMatrix, 4> g;
  CMatrix sum(4, 4);
  for (auto& m : g) {
    CMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        a(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
    m = a * a.adjoint();
    sum += m;
  }
  // sum^{-1/2} . m . sum^{-1/2}
  const auto es = numkit::hermitian_eigensystem(sum);
  CMatrix inv_sqrt(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CMatrix col(4, 1);
    for (std::size_t i = 0; i < 4; ++i) col(i, 0) = es.vectors(i, k);
    inv_sqrt += Complex{1.0 / std::sqrt(es.values[k]), 0.0} * numkit::outer(col, col);
  }
  for (auto& m : g) m = inv_sqrt * m * inv_sqrt;
  return g;
}

std::array<int, 4> random_permutation(SplitMix64& rng) {
  std::array<int, 4> p{1, 2, 3, 4};
  for (int i = 3; i > 0; --i)
    std::swap(p[i], p[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
  return p;
}

}  // namespace

std::vector<QuantumProtocolSpec> sample_two_qubit_protocols(std::uint64_t seed, int count) {
  SplitMix64 root(seed);
  std::vector<QuantumProtocolSpec> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng = root.split();
    const QuantumChannel channel =
        qchannel::not_mixture(qchannel::random_not_mixture(rng, 2, 3));
    if (k % 2 == 0) {
      // Randomised dense coding: local frames W_A, W_B and a box relabelling.
      const CMatrix wa = numkit::haar_unitary(2, rng);
      const CMatrix wb = numkit::haar_unitary(2, rng);
      const auto perm = random_permutation(rng);
      const CMatrix lift_wb = numkit::tensor(CMatrix::identity(2), wb);
      QuantumProtocolSpec spec{lift_wb * (numkit::tensor(wa, CMatrix::identity(2)) *
                                          qchannel::bell_projector(1) *
                                          numkit::tensor(wa, CMatrix::identity(2)).adjoint()) *
                                   lift_wb.adjoint(),
                               {},
                               channel,
                               {}};
      for (int b = 1; b <= 4; ++b)
        spec.encodings.push_back(
            QuantumChannel({qchannel::pauli_op(perm[b - 1]) * wa.adjoint()}));
      for (int y = 1; y <= 4; ++y)
        spec.povm[y - 1] =
            lift_wb * qchannel::bell_projector(perm[y - 1]) * lift_wb.adjoint();
      out.push_back(std::move(spec));
    } else {
      QuantumProtocolSpec spec{random_entangled_state(rng), {}, channel, random_povm(rng)};
      for (int b = 1; b <= 4; ++b)
        spec.encodings.push_back(QuantumChannel({numkit::haar_unitary(2, rng)}));
      out.push_back(std::move(spec));
    }
  }
  return out;
}

}  // namespace bombprize::game
