#include "bombprize/classical/strategy.hpp"

#include <stdexcept>

namespace bombprize::classical {

using game::all_configs;
using numkit::Rational;

void ClassicalStrategy::validate() const {
  if (d < 1) throw std::invalid_argument("ClassicalStrategy: d must be positive");
  if (enc.size() != all_configs().size())
    throw std::invalid_argument("ClassicalStrategy: need one encoder row per configuration");
  for (const auto& row : enc) {
    if (row.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("ClassicalStrategy: encoder row size mismatch");
    Rational sum(0);
    for (const auto& w : row) {
      if (w < Rational(0) || w > Rational(1))
        throw std::invalid_argument("ClassicalStrategy: encoder weight outside [0,1]");
      sum += w;
    }
    if (sum != Rational(1)) throw std::invalid_argument("ClassicalStrategy: encoder row not stochastic");
  }
  if (dec.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("ClassicalStrategy: need one decoder row per message");
  for (const auto& row : dec) {
    Rational sum(0);
    for (const auto& w : row) {
      if (w < Rational(0) || w > Rational(1))
        throw std::invalid_argument("ClassicalStrategy: decoder weight outside [0,1]");
      sum += w;
    }
    if (sum != Rational(1)) throw std::invalid_argument("ClassicalStrategy: decoder row not stochastic");
  }
}

game::ExactGameDistribution eval_classical(const ClassicalStrategy& s) {
  s.validate();
  game::ExactGameDistribution out;
  const auto& configs = all_configs();
  for (std::size_t i = 0; i < configs.size(); ++i)
    for (int y = 1; y <= 4; ++y) {
      Rational p(0);
      for (int m = 0; m < s.d; ++m) p += s.enc[i][m] * s.dec[m][y - 1];
      out.prob(configs[i].bomb, configs[i].prize, y) = p;
    }
  game::validate_distribution(out);
  return out;
}

game::GameDistribution eval_classical(const ClassicalStrategy& s, const BitChannel& ch) {
  s.validate();
  ch.validate();
  if (s.d != 2) throw std::invalid_argument("eval_classical: bit channel needs d = 2");
  game::GameDistribution out;
  const auto& configs = all_configs();
  for (std::size_t i = 0; i < configs.size(); ++i)
    for (int y = 1; y <= 4; ++y) {
      double p = 0.0;
      for (int m = 0; m < 2; ++m)
        for (int mp = 0; mp < 2; ++mp)
          p += s.dec[mp][y - 1].to_double() * ch.p[mp][m] * s.enc[i][m].to_double();
      out.prob(configs[i].bomb, configs[i].prize, y) = p;
    }
  game::validate_distribution(out, 1e-10);
  return out;
}

game::ExactGameDistribution eval_classical(const SRStrategy& s) {
  if (s.components.empty()) throw std::invalid_argument("SRStrategy: empty mixture");
  Rational total(0);
  game::ExactGameDistribution out;
  for (const auto& comp : s.components) {
    total += comp.weight;
    const auto d = eval_classical(comp.strategy);
    for (const auto& c : all_configs())
      for (int y = 1; y <= 4; ++y)
        out.prob(c.bomb, c.prize, y) += comp.weight * d.prob(c.bomb, c.prize, y);
  }
  if (total != Rational(1)) throw std::invalid_argument("SRStrategy: weights do not sum to 1");
  game::validate_distribution(out);
  return out;
}

}  // namespace bombprize::classical
