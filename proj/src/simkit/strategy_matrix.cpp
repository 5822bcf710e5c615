#include "bombprize/simkit/strategy_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bombprize::simkit {

using numkit::Rational;

numkit::Rational& StrategyMatrix::at(int y, int b) {
  if (y < 1 || y > 4 || b < 1 || b > 4) throw std::out_of_range("StrategyMatrix: index");
  return m_[(y - 1) * 4 + (b - 1)];
}

const numkit::Rational& StrategyMatrix::at(int y, int b) const {
  return const_cast<StrategyMatrix*>(this)->at(y, b);
}

void StrategyMatrix::validate() const {
  for (int b = 1; b <= 4; ++b) {
    Rational sum(0);
    for (int y = 1; y <= 4; ++y) {
      const Rational& v = at(y, b);
      if (v < Rational(0) || v > Rational(1))
        throw std::invalid_argument("StrategyMatrix: entry outside [0,1]");
      sum += v;
    }
    if (sum != Rational(1))
      throw std::invalid_argument("StrategyMatrix: column does not sum to 1");
  }
}

bool StrategyMatrix::is_off_diagonal() const {
  for (int k = 1; k <= 4; ++k)
    if (!at(k, k).is_zero()) return false;
  return true;
}

nlohmann::json StrategyMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int y = 1; y <= 4; ++y) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 1; b <= 4; ++b) row.push_back(at(y, b).to_string());
    rows.push_back(row);
  }
  return {{"m", rows}};
}

StrategyMatrix StrategyMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_array() || j["m"].size() != 4)
    throw std::invalid_argument("strategy matrix json: need \"m\" with 4 rows");
  StrategyMatrix m;
  for (int y = 1; y <= 4; ++y) {
    const auto& row = j["m"][y - 1];
    if (!row.is_array() || row.size() != 4)
      throw std::invalid_argument("strategy matrix json: rows need 4 entries");
    for (int b = 1; b <= 4; ++b) m.at(y, b) = Rational::parse(row[b - 1].get<std::string>());
  }
  m.validate();
  return m;
}

StrategyMatrix classical_not() {
  StrategyMatrix m;
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) m.at(y, b) = (y == b) ? Rational(0) : Rational(1, 3);
  return m;
}

SubtypeId::SubtypeId(std::vector<int> side0, std::vector<int> side1)
    : s0_(std::move(side0)), s1_(std::move(side1)) {
  const auto prep = [](std::vector<int>& s) {
    std::sort(s.begin(), s.end());
    if (s.empty() || s.front() < 1 || s.back() > 4 ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("SubtypeId: sides must be nonempty subsets of 1..4");
  };
  prep(s0_);
  prep(s1_);
  for (int v : s0_)
    if (std::binary_search(s1_.begin(), s1_.end(), v))
      throw std::invalid_argument("SubtypeId: sides must be disjoint");
  if (s0_.size() > s1_.size() || (s0_.size() == s1_.size() && s0_.front() > s1_.front()))
    std::swap(s0_, s1_);
}

std::pair<int, int> SubtypeId::type() const {
  return {static_cast<int>(s0_.size()), static_cast<int>(s1_.size())};
}

std::string SubtypeId::name() const {
  std::string out;
  for (int v : s0_) out += static_cast<char>('0' + v);
  out += '|';
  for (int v : s1_) out += static_cast<char>('0' + v);
  return out;
}

const std::vector<SubtypeId>& SubtypeId::all() {
  static const std::vector<SubtypeId> subtypes = [] {
    std::vector<SubtypeId> out;
    for (unsigned a = 1; a < 16; ++a)
      for (unsigned b = a + 1; b < 16; ++b) {
        if ((a & b) != 0) continue;
        std::vector<int> s0, s1;
        for (int v = 0; v < 4; ++v) {
          if (a >> v & 1u) s0.push_back(v + 1);
          if (b >> v & 1u) s1.push_back(v + 1);
        }
        out.emplace_back(std::move(s0), std::move(s1));
      }
    return out;
  }();
  return subtypes;
}

StrategyMatrix subtype_matrix(const SubtypeId& s, const Rational& p, const Rational& r) {
  const auto in_range = [](const Rational& v) { return Rational(0) <= v && v <= Rational(1); };
  if (!in_range(p) || !in_range(r))
    throw std::invalid_argument("subtype_matrix: parameters must be probabilities");
  const auto [m, n] = s.type();
  if (m == 1 && n == 3 && p + r > Rational(1))
    throw std::invalid_argument("subtype_matrix: type (1,3) needs p + r <= 1");

  const auto& l = s.side0();
  const auto& rgt = s.side1();
  StrategyMatrix out;

  if (m == 1 && n == 1) {
    // free inputs mix between the two opened boxes, p for the smaller input
    std::vector<int> free;
    for (int b = 1; b <= 4; ++b)
      if (b != l[0] && b != rgt[0]) free.push_back(b);
    out.at(rgt[0], l[0]) = Rational(1);
    out.at(l[0], rgt[0]) = Rational(1);
    out.at(l[0], free[0]) = p;
    out.at(rgt[0], free[0]) = Rational(1) - p;
    out.at(l[0], free[1]) = r;
    out.at(rgt[0], free[1]) = Rational(1) - r;
  } else if (m == 1 && n == 2) {
    int free = 0;
    for (int b = 1; b <= 4; ++b)
      if (b != l[0] && b != rgt[0] && b != rgt[1]) free = b;
    // message 1 spreads over the pair with weight p on its smaller box
    out.at(rgt[0], l[0]) = p;
    out.at(rgt[1], l[0]) = Rational(1) - p;
    out.at(l[0], rgt[0]) = Rational(1);
    out.at(l[0], rgt[1]) = Rational(1);
    out.at(l[0], free) = Rational(1) - r;
    out.at(rgt[0], free) = r * p;
    out.at(rgt[1], free) = r * (Rational(1) - p);
  } else if (m == 1 && n == 3) {
    out.at(rgt[0], l[0]) = p;
    out.at(rgt[1], l[0]) = r;
    out.at(rgt[2], l[0]) = Rational(1) - p - r;
    for (int b : rgt) out.at(l[0], b) = Rational(1);
  } else {  // (2,2)
    out.at(rgt[0], l[0]) = p;
    out.at(rgt[1], l[0]) = Rational(1) - p;
    out.at(rgt[0], l[1]) = p;
    out.at(rgt[1], l[1]) = Rational(1) - p;
    out.at(l[0], rgt[0]) = r;
    out.at(l[1], rgt[0]) = Rational(1) - r;
    out.at(l[0], rgt[1]) = r;
    out.at(l[1], rgt[1]) = Rational(1) - r;
  }
  out.validate();
  return out;
}

void BitStrategy::validate() const {
  for (const auto& row : enc) {
    Rational sum(0);
    for (const auto& w : row) {
      if (w < Rational(0) || w > Rational(1))
        throw std::invalid_argument("BitStrategy: encoder weight outside [0,1]");
      sum += w;
    }
    if (sum != Rational(1)) throw std::invalid_argument("BitStrategy: encoder row not stochastic");
  }
  for (const auto& row : dec) {
    Rational sum(0);
    for (const auto& w : row) {
      if (w < Rational(0) || w > Rational(1))
        throw std::invalid_argument("BitStrategy: decoder weight outside [0,1]");
      sum += w;
    }
    if (sum != Rational(1)) throw std::invalid_argument("BitStrategy: decoder row not stochastic");
  }
}

StrategyMatrix BitStrategy::to_matrix() const {
  validate();
  StrategyMatrix m;
  for (int b = 1; b <= 4; ++b)
    for (int y = 1; y <= 4; ++y) {
      Rational v(0);
      for (int msg = 0; msg < 2; ++msg) v += enc[b - 1][msg] * dec[msg][y - 1];
      m.at(y, b) = v;
    }
  m.validate();
  return m;
}

std::optional<SubtypeId> classify_strategy(const BitStrategy& s) {
  const StrategyMatrix m = s.to_matrix();
  if (!m.is_off_diagonal()) return std::nullopt;
  std::vector<int> b0, b1;
  for (int y = 1; y <= 4; ++y) {
    if (!s.dec[0][y - 1].is_zero()) b0.push_back(y);
    if (!s.dec[1][y - 1].is_zero()) b1.push_back(y);
  }
  for (int y : b0)
    if (std::find(b1.begin(), b1.end(), y) != b1.end()) return std::nullopt;
  return SubtypeId(std::move(b0), std::move(b1));
}

}  // namespace bombprize::simkit
