#include "bombprize/game/json.hpp"

#include <cmath>
#include <stdexcept>

namespace bombprize::game {

using nlohmann::json;
using numkit::Rational;

json distribution_to_json(const GameDistribution& d) {
  json rows = json::array();
  for (const auto& c : all_configs()) {
    json y = json::array();
    for (int box = 1; box <= 4; ++box) y.push_back(d.prob(c.bomb, c.prize, box));
    rows.push_back({{"b", c.bomb}, {"x", c.prize}, {"y", y}});
  }
  return {{"p", rows}};
}

GameDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array())
    throw std::invalid_argument("distribution json: missing \"p\" array");
  GameDistribution d;
  std::size_t seen = 0;
  for (const auto& row : j["p"]) {
    const int b = row.at("b").get<int>();
    const int x = row.at("x").get<int>();
    if (!valid_config(b, x)) throw std::invalid_argument("distribution json: invalid (b, x)");
    const auto& y = row.at("y");
    if (!y.is_array() || y.size() != 4)
      throw std::invalid_argument("distribution json: \"y\" must have 4 entries");
    for (int box = 1; box <= 4; ++box) d.prob(b, x, box) = y[box - 1].get<double>();
    ++seen;
  }
  if (seen != all_configs().size())
    throw std::invalid_argument("distribution json: expected all 12 configurations");
  validate_distribution(d, 1e-9);
  return d;
}

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) {
    // snap to the closest fraction with a modest denominator
    const double x = v.get<double>();
    long long best_n = 0, best_d = 1;
    double best_err = std::abs(x);
    for (long long den = 1; den <= 3600; ++den) {
      const long long num = std::llround(x * den);
      const double err = std::abs(x - static_cast<double>(num) / den);
      if (err < best_err - 1e-15) {
        best_err = err;
        best_n = num;
        best_d = den;
        if (err < 1e-12) break;
      }
    }
    return Rational(best_n, best_d);
  }
  throw std::invalid_argument("prior json: weight must be a string or number");
}

}  // namespace

json prior_to_json(const Prior& p) {
  json rows = json::array();
  for (const auto& c : all_configs())
    rows.push_back({{"b", c.bomb}, {"x", c.prize}, {"w", p.weight(c.bomb, c.prize).to_string()}});
  return {{"pi", rows}};
}

Prior prior_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pi") || !j["pi"].is_array())
    throw std::invalid_argument("prior json: missing \"pi\" array");
  Prior p;
  for (const auto& row : j["pi"]) {
    const int b = row.at("b").get<int>();
    const int x = row.at("x").get<int>();
    if (!valid_config(b, x)) throw std::invalid_argument("prior json: invalid (b, x)");
    p.set_weight(b, x, rational_from_json(row.at("w")));
  }
  p.validate();
  return p;
}

}  // namespace bombprize::game
