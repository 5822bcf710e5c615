#include "bombprize/game/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bombprize::game {

using numkit::Rational;

bool valid_config(int b, int x) { return b >= 1 && b <= 4 && x >= 1 && x <= 4 && b != x; }

const std::vector<GameConfig>& all_configs() {
  static const std::vector<GameConfig> configs = [] {
    std::vector<GameConfig> v;
    for (int b = 1; b <= 4; ++b)
      for (int x = 1; x <= 4; ++x)
        if (b != x) v.push_back({b, x});
    return v;
  }();
  return configs;
}

void validate_distribution(const GameDistribution& d, double tol) {
  for (const auto& c : all_configs()) {
    double sum = 0.0;
    for (int y = 1; y <= 4; ++y) {
      const double p = d.prob(c.bomb, c.prize, y);
      if (p < -tol || p > 1.0 + tol)
        throw std::invalid_argument("GameDistribution: probability outside [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
      throw std::invalid_argument("GameDistribution: row does not sum to 1");
  }
}

void validate_distribution(const ExactGameDistribution& d) {
  for (const auto& c : all_configs()) {
    Rational sum(0);
    for (int y = 1; y <= 4; ++y) {
      const Rational& p = d.prob(c.bomb, c.prize, y);
      if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("GameDistribution: probability outside [0,1]");
      sum += p;
    }
    if (sum != Rational(1)) throw std::invalid_argument("GameDistribution: row does not sum to 1");
  }
}

GameDistribution to_double(const ExactGameDistribution& d) {
  GameDistribution out;
  for (const auto& c : all_configs())
    for (int y = 1; y <= 4; ++y)
      out.prob(c.bomb, c.prize, y) = d.prob(c.bomb, c.prize, y).to_double();
  return out;
}

namespace {

template <typename T, typename Pick, typename Better, typename Tied>
WorstCase<T> scan(const GameTable<T>& d, Pick pick, Better better, Tied tied) {
  WorstCase<T> out;
  bool first = true;
  for (const auto& c : all_configs()) {
    const T v = pick(d, c);
    if (first || better(v, out.value)) {
      out.value = v;
      out.argset.clear();
      out.argset.push_back(c);
      first = false;
    } else if (tied(v, out.value)) {
      out.argset.push_back(c);
    }
  }
  return out;
}

const auto pick_prize_d = [](const GameDistribution& d, const GameConfig& c) {
  return d.prob(c.bomb, c.prize, c.prize);
};
const auto pick_bomb_d = [](const GameDistribution& d, const GameConfig& c) {
  return d.prob(c.bomb, c.prize, c.bomb);
};
const auto pick_prize_r = [](const ExactGameDistribution& d, const GameConfig& c) {
  return d.prob(c.bomb, c.prize, c.prize);
};
const auto pick_bomb_r = [](const ExactGameDistribution& d, const GameConfig& c) {
  return d.prob(c.bomb, c.prize, c.bomb);
};

constexpr double kTieTol = 1e-12;

}  // namespace

WorstCase<double> worst_prize(const GameDistribution& d) {
  return scan<double>(d, pick_prize_d, [](double a, double b) { return a < b - kTieTol; },
                      [](double a, double b) { return std::abs(a - b) <= kTieTol; });
}

WorstCase<double> worst_bomb(const GameDistribution& d) {
  return scan<double>(d, pick_bomb_d, [](double a, double b) { return a > b + kTieTol; },
                      [](double a, double b) { return std::abs(a - b) <= kTieTol; });
}

WorstCase<Rational> worst_prize(const ExactGameDistribution& d) {
  return scan<Rational>(d, pick_prize_r, [](const Rational& a, const Rational& b) { return a < b; },
                        [](const Rational& a, const Rational& b) { return a == b; });
}

WorstCase<Rational> worst_bomb(const ExactGameDistribution& d) {
  return scan<Rational>(d, pick_bomb_r, [](const Rational& a, const Rational& b) { return a > b; },
                        [](const Rational& a, const Rational& b) { return a == b; });
}

Prior Prior::uniform() {
  Prior p;
  for (const auto& c : all_configs()) p.set_weight(c.bomb, c.prize, Rational(1, 12));
  return p;
}

Rational Prior::weight(int b, int x) const {
  if (!valid_config(b, x)) throw std::out_of_range("Prior: invalid (b, x)");
  return pi_[(b - 1) * 4 + (x - 1)];
}

void Prior::set_weight(int b, int x, const Rational& w) {
  if (!valid_config(b, x)) throw std::out_of_range("Prior: invalid (b, x)");
  if (w < Rational(0) || w > Rational(1)) throw std::invalid_argument("Prior: weight outside [0,1]");
  pi_[(b - 1) * 4 + (x - 1)] = w;
}

void Prior::validate() const {
  Rational sum(0);
  for (const auto& c : all_configs()) sum += weight(c.bomb, c.prize);
  if (sum != Rational(1)) throw std::invalid_argument("Prior: weights do not sum to 1");
}

Rational Prior::bomb_marginal(int b) const {
  Rational s(0);
  for (int x = 1; x <= 4; ++x)
    if (x != b) s += weight(b, x);
  return s;
}

Rational Prior::prize_marginal(int x) const {
  Rational s(0);
  for (int b = 1; b <= 4; ++b)
    if (b != x) s += weight(b, x);
  return s;
}

Rational Prior::min_bomb_marginal() const {
  Rational m = bomb_marginal(1);
  for (int b = 2; b <= 4; ++b) m = std::min(m, bomb_marginal(b));
  return m;
}

double avg_bomb(const GameDistribution& d, const Prior& prior) {
  double s = 0.0;
  for (const auto& c : all_configs())
    s += prior.weight(c.bomb, c.prize).to_double() * d.prob(c.bomb, c.prize, c.bomb);
  return s;
}

double avg_prize(const GameDistribution& d, const Prior& prior) {
  double s = 0.0;
  for (const auto& c : all_configs())
    s += prior.weight(c.bomb, c.prize).to_double() * d.prob(c.bomb, c.prize, c.prize);
  return s;
}

Rational avg_bomb(const ExactGameDistribution& d, const Prior& prior) {
  Rational s(0);
  for (const auto& c : all_configs())
    s += prior.weight(c.bomb, c.prize) * d.prob(c.bomb, c.prize, c.bomb);
  return s;
}

Rational avg_prize(const ExactGameDistribution& d, const Prior& prior) {
  Rational s(0);
  for (const auto& c : all_configs())
    s += prior.weight(c.bomb, c.prize) * d.prob(c.bomb, c.prize, c.prize);
  return s;
}

double theorem1_bound(double capacity) {
  if (capacity < 0.0 || capacity > 1.0)
    throw std::invalid_argument("theorem1_bound: capacity outside [0,1]");
  return std::pow(1.0 - capacity, std::log(4.0)) / 16.0;
}

double theorem1ave_bound(double capacity, const Prior& prior) {
  if (capacity < 0.0 || capacity > 1.0)
    throw std::invalid_argument("theorem1ave_bound: capacity outside [0,1]");
  return prior.min_bomb_marginal().to_double() * std::pow(1.0 - capacity, std::log(4.0)) / 4.0;
}

AverageStrategy optimal_average_strategy(const Prior& prior, int d) {
  if (d < 2 || d > 4) throw std::invalid_argument("optimal_average_strategy: d must be 2..4");
  prior.validate();

  // Open the d boxes with the largest prize marginals.
  std::vector<int> boxes{1, 2, 3, 4};
  std::stable_sort(boxes.begin(), boxes.end(), [&](int a, int b) {
    return prior.prize_marginal(b) < prior.prize_marginal(a);
  });
  std::vector<int> opened(boxes.begin(), boxes.begin() + d);

  const auto message_for = [&](int b, int x) -> int {  // 1-based message
    for (int m = 0; m < d; ++m)
      if (opened[m] == x) return m + 1;
    // prize in a box that is never opened: route by the bomb position so the
    // opened box always differs from b
    for (int m = 0; m + 1 < d; ++m)
      if (opened[m + 1] == b) return m + 1;
    return d;  // covers b == opened[0] and b outside the opened set
  };

  AverageStrategy out;
  out.opened = opened;
  for (const auto& c : all_configs()) {
    const int m = message_for(c.bomb, c.prize);
    const int y = opened[m - 1];
    if (y == c.bomb) throw std::logic_error("optimal_average_strategy: bomb-avoidance broken");
    out.distribution.prob(c.bomb, c.prize, y) = Rational(1);
  }
  validate_distribution(out.distribution);

  out.value = Rational(0);
  for (int y : opened) out.value += prior.prize_marginal(y);
  if (avg_prize(out.distribution, prior) != out.value)
    throw std::logic_error("optimal_average_strategy: value mismatch");
  return out;
}

}  // namespace bombprize::game
