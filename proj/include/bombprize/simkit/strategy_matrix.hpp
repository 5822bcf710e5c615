#pragma once

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bombprize/numkit/rational.hpp"

namespace bombprize::simkit {

/// Column-stochastic 4x4 matrix of exact probabilities, entry (y, b) = p(y|b).
class StrategyMatrix {
 public:
  StrategyMatrix() = default;

  numkit::Rational& at(int y, int b);
  const numkit::Rational& at(int y, int b) const;

  void validate() const;          // columns sum to 1, entries in [0,1]
  bool is_off_diagonal() const;   // zero diagonal

  friend bool operator==(const StrategyMatrix& a, const StrategyMatrix& b) {
    return a.m_ == b.m_;
  }

  nlohmann::json to_json() const;  // {"m":[["0","1/3",...], ...]} row-major
  static StrategyMatrix from_json(const nlohmann::json& j);

 private:
  std::array<numkit::Rational, 16> m_{};
};

/// The 4-box basis-flip distribution: zero diagonal, 1/3 elsewhere.
StrategyMatrix classical_not();

/// Unordered pair of disjoint nonempty box sets; normalised so the smaller
/// side (or the side holding the smallest box, on ties) comes first.
class SubtypeId {
 public:
  SubtypeId(std::vector<int> side0, std::vector<int> side1);

  const std::vector<int>& side0() const { return s0_; }
  const std::vector<int>& side1() const { return s1_; }
  std::pair<int, int> type() const;  // (1,1), (1,2), (1,3) or (2,2)
  std::string name() const;          // e.g. "1|234"

  friend bool operator==(const SubtypeId& a, const SubtypeId& b) {
    return a.s0_ == b.s0_ && a.s1_ == b.s1_;
  }

  static const std::vector<SubtypeId>& all();  // the 25 subtypes

 private:
  std::vector<int> s0_, s1_;
};

/// The parameterised matrix of the given subtype. Both parameters are
/// probabilities; for type (1,3) they additionally satisfy p + r <= 1.
StrategyMatrix subtype_matrix(const SubtypeId& s, const numkit::Rational& p,
                              const numkit::Rational& r);

/// Bomb-only strategy over a noiseless bit: enc[b][m], dec[m][y].
struct BitStrategy {
  std::array<std::array<numkit::Rational, 2>, 4> enc{};
  std::array<std::array<numkit::Rational, 4>, 2> dec{};

  void validate() const;
  StrategyMatrix to_matrix() const;
};

/// Decoder-support classification; empty when the induced matrix has a
/// nonzero diagonal entry (no subtype applies).
std::optional<SubtypeId> classify_strategy(const BitStrategy& s);

}  // namespace bombprize::simkit
