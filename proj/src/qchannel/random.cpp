#include "bombprize/qchannel/random.hpp"

#include <stdexcept>

namespace bombprize::qchannel {

BasisPair random_basis(numkit::SplitMix64& rng) {
  const CMatrix u = numkit::haar_unitary(2, rng);
  CMatrix k0(2, 1), k1(2, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    k0(i, 0) = u(i, 0);
    k1(i, 0) = u(i, 1);
  }
  return {k0, k1};
}

PauliParams random_pauli_params(numkit::SplitMix64& rng) {
  double w[4], sum = 0.0;
  for (double& x : w) {
    x = rng.next_double() + 1e-6;
    sum += x;
  }
  return {w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum};
}

NotMixture random_not_mixture(numkit::SplitMix64& rng, int min_components, int max_components) {
  if (min_components < 1 || max_components < min_components)
    throw std::invalid_argument("random_not_mixture: bad component range");
  const int n = min_components +
                static_cast<int>(rng.next_below(static_cast<std::uint64_t>(
                    max_components - min_components + 1)));
  NotMixture m;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    NotMixture::Component c;
    c.weight = rng.next_double() + 0.05;
    sum += c.weight;
    c.basis = random_basis(rng);
    m.components.push_back(std::move(c));
  }
  for (auto& c : m.components) c.weight /= sum;
  return m;
}

}  // namespace bombprize::qchannel
