#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bombprize/numkit/rational.hpp"

namespace bombprize::game {

/// Box labels run 1..4; the bomb and the prize never share a box.
struct GameConfig {
  int bomb = 0;
  int prize = 0;
};

inline bool operator==(const GameConfig& a, const GameConfig& b) {
  return a.bomb == b.bomb && a.prize == b.prize;
}

bool valid_config(int b, int x);
/// The 12 valid configurations in a fixed scan order (b major, x minor).
const std::vector<GameConfig>& all_configs();

/// Conditional output table p(y | b, x) over the 12 valid configurations.
template <typename T>
class GameTable {
 public:
  T& prob(int b, int x, int y) { return p_[index(b, x, y)]; }
  const T& prob(int b, int x, int y) const { return p_[index(b, x, y)]; }

  friend bool operator==(const GameTable& a, const GameTable& b) { return a.p_ == b.p_; }

 private:
  static std::size_t index(int b, int x, int y) {
    if (!valid_config(b, x) || y < 1 || y > 4)
      throw std::out_of_range("GameTable: invalid (b, x, y)");
    return static_cast<std::size_t>((b - 1) * 16 + (x - 1) * 4 + (y - 1));
  }
  std::array<T, 64> p_{};
};

using GameDistribution = GameTable<double>;
using ExactGameDistribution = GameTable<numkit::Rational>;

/// Row-sum validation: exact for rationals, within tol for floats.
void validate_distribution(const GameDistribution& d, double tol = 1e-12);
void validate_distribution(const ExactGameDistribution& d);

GameDistribution to_double(const ExactGameDistribution& d);

template <typename T>
struct WorstCase {
  T value{};
  std::vector<GameConfig> argset;  // every configuration attaining the value
};

WorstCase<double> worst_prize(const GameDistribution& d);
WorstCase<double> worst_bomb(const GameDistribution& d);
WorstCase<numkit::Rational> worst_prize(const ExactGameDistribution& d);
WorstCase<numkit::Rational> worst_bomb(const ExactGameDistribution& d);

/// Prior over configurations, exact weights; pi(b, b) = 0 by construction.
class Prior {
 public:
  static Prior uniform();

  numkit::Rational weight(int b, int x) const;
  void set_weight(int b, int x, const numkit::Rational& w);
  void validate() const;  // weights form a probability vector

  numkit::Rational bomb_marginal(int b) const;
  numkit::Rational prize_marginal(int x) const;
  numkit::Rational min_bomb_marginal() const;

 private:
  std::array<numkit::Rational, 16> pi_{};
};

double avg_bomb(const GameDistribution& d, const Prior& prior);
double avg_prize(const GameDistribution& d, const Prior& prior);
numkit::Rational avg_bomb(const ExactGameDistribution& d, const Prior& prior);
numkit::Rational avg_prize(const ExactGameDistribution& d, const Prior& prior);

/// (1 - C)^(ln 4) / 16 for C in [0, 1].
double theorem1_bound(double capacity);
/// pi_min^bomb * (1 - C)^(ln 4) / 4.
double theorem1ave_bound(double capacity, const Prior& prior);

/// Deterministic bomb-avoiding strategy maximising the average prize
/// probability with a d-symbol noiseless channel, plus its exact value
/// (the sum of the d largest prize marginals).
struct AverageStrategy {
  ExactGameDistribution distribution;
  numkit::Rational value;
  std::vector<int> opened;  // box opened on message m = 1..d
};
AverageStrategy optimal_average_strategy(const Prior& prior, int d);

}  // namespace bombprize::game
