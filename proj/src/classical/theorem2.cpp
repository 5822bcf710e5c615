#include "bombprize/classical/theorem2.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bombprize::classical {

using game::all_configs;
using game::GameConfig;
using numkit::Rational;

namespace {

// Depth-first walk over the encodings allowed by a fixed decoding: at each
// configuration only messages whose opened box misses the bomb are explored,
// so every leaf is one bomb-avoiding deterministic strategy.
struct EnumState {
  const std::vector<int>* decoding;  // box per message, 1..4
  int d;
  std::uint64_t leaves = 0;
  std::uint64_t prize_certain = 0;
};

void walk(EnumState& st, std::size_t config_index, bool prize_everywhere) {
  const auto& configs = all_configs();
  if (config_index == configs.size()) {
    ++st.leaves;
    if (prize_everywhere) ++st.prize_certain;
    return;
  }
  const auto& c = configs[config_index];
  for (int m = 0; m < st.d; ++m) {
    const int y = (*st.decoding)[m];
    if (y == c.bomb) continue;
    walk(st, config_index + 1, prize_everywhere && y == c.prize);
  }
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

Theorem2Report enumerate_theorem2(int d, int stochastic_samples, std::uint64_t seed,
                                  const DecodingCallback& cb) {
  if (d != 2 && d != 3) throw std::invalid_argument("enumerate_theorem2: d must be 2 or 3");
  Theorem2Report report;
  report.d = d;

  std::vector<int> decoding(d, 1);
  const std::uint64_t num_decodings = ipow(4, d);
  for (std::uint64_t code = 0; code < num_decodings; ++code) {
    std::uint64_t rest = code;
    for (int m = 0; m < d; ++m) {
      decoding[m] = static_cast<int>(rest % 4) + 1;
      rest /= 4;
    }
    EnumState st{&decoding, d};
    walk(st, 0, true);
    report.decodings += 1;
    report.encodings_considered += ipow(static_cast<std::uint64_t>(d), 12);
    report.bomb_avoiding += st.leaves;
    report.prize_certain += st.prize_certain;
    if (cb) cb(decoding, st.leaves, st.prize_certain);
  }

  numkit::SplitMix64 rng(seed);
  report.stochastic_samples = stochastic_samples;
  for (int s = 0; s < stochastic_samples; ++s) {
    const ClassicalStrategy strat = sample_bomb_avoiding_strategy(d, rng);
    const auto dist = eval_classical(strat);
    if (game::worst_bomb(dist).value != Rational(0) ||
        game::worst_prize(dist).value != Rational(0))
      ++report.stochastic_failures;
  }
  return report;
}

ClassicalStrategy sample_bomb_avoiding_strategy(int d, numkit::SplitMix64& rng) {
  if (d < 2 || d > 4) throw std::invalid_argument("sample_bomb_avoiding_strategy: d must be 2..4");

  // Decoder supports: nonempty box sets whose overall intersection is empty.
  std::vector<unsigned> supports(d);
  for (;;) {
    unsigned meet = 0xF;
    for (auto& s : supports) {
      s = static_cast<unsigned>(rng.next_below(15) + 1);  // nonempty subsets of 4 boxes
      meet &= s;
    }
    if (meet == 0) break;
  }

  ClassicalStrategy strat;
  strat.d = d;
  strat.dec.resize(d);
  for (int m = 0; m < d; ++m) {
    std::array<long long, 4> w{};
    long long sum = 0;
    for (int y = 0; y < 4; ++y) {
      if (!(supports[m] >> y & 1u)) continue;
      w[y] = static_cast<long long>(rng.next_below(8) + 1);
      sum += w[y];
    }
    for (int y = 0; y < 4; ++y) strat.dec[m][y] = Rational(w[y], sum);
  }

  for (const auto& c : all_configs()) {
    std::vector<Rational> row(d, Rational(0));
    std::array<long long, 4> w{};
    long long sum = 0;
    for (int m = 0; m < d; ++m) {
      if (supports[m] >> (c.bomb - 1) & 1u) continue;  // message would risk the bomb
      w[m] = static_cast<long long>(rng.next_below(8) + 1);
      sum += w[m];
    }
    for (int m = 0; m < d; ++m) row[m] = Rational(w[m], sum);
    strat.enc.push_back(std::move(row));
  }
  return strat;
}

ClassicalStrategy send_prize_strategy() {
  ClassicalStrategy strat;
  strat.d = 4;
  strat.dec.resize(4);
  for (int m = 0; m < 4; ++m) strat.dec[m][m] = Rational(1);
  for (const auto& c : all_configs()) {
    std::vector<Rational> row(4, Rational(0));
    row[c.prize - 1] = Rational(1);
    strat.enc.push_back(std::move(row));
  }
  return strat;
}

GameConfig zero_prize_witness(const std::vector<std::vector<int>>& supports) {
  if (supports.empty() || supports.size() > 3)
    throw std::invalid_argument("zero_prize_witness: need 1..3 supports");
  std::vector<unsigned> sets;
  for (const auto& s : supports) {
    unsigned mask = 0;
    for (int y : s) {
      if (y < 1 || y > 4) throw std::invalid_argument("zero_prize_witness: box labels are 1..4");
      mask |= 1u << (y - 1);
    }
    if (mask == 0) throw std::invalid_argument("zero_prize_witness: supports must be nonempty");
    sets.push_back(mask);
  }
  while (sets.size() < 3) sets.push_back(sets.back());  // a two-message strategy, message padded

  unsigned meet = sets[0] & sets[1] & sets[2];
  if (meet != 0)
    throw std::invalid_argument("zero_prize_witness: supports share a common box");

  const auto popcount = [](unsigned m) { return __builtin_popcount(m); };
  const auto lowest = [](unsigned m) { return __builtin_ctz(m) + 1; };

  const unsigned join = sets[0] | sets[1] | sets[2];
  if (join != 0xF) {
    // a box no message ever opens: hide the prize there
    const int x = lowest(~join & 0xF);
    const int b = (x == 1) ? 2 : 1;
    return {b, x};
  }

  // two messages share two boxes: a bomb there pins the third message
  for (int alpha = 0; alpha < 3; ++alpha)
    for (int beta = alpha + 1; beta < 3; ++beta) {
      const unsigned common = sets[alpha] & sets[beta];
      if (popcount(common) < 2) continue;
      const int y0 = lowest(common);
      const int y1 = lowest(common & ~(1u << (y0 - 1)));
      return {y0, y1};
    }

  // all pairwise overlaps have at most one box
  const unsigned pairwise = (sets[0] & sets[1]) | (sets[1] & sets[2]) | (sets[0] & sets[2]);
  const unsigned solo = 0xF & ~pairwise;  // boxes owned by a single message
  const int y0 = lowest(solo);
  int alpha = 0;
  while (!(sets[alpha] >> (y0 - 1) & 1u)) ++alpha;

  if (popcount(sets[alpha]) >= 2) {
    const int y1 = lowest(sets[alpha] & ~(1u << (y0 - 1)));
    return {y1, y0};
  }

  int beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
  if (popcount(sets[beta]) < 2) std::swap(beta, gamma);
  const unsigned exclusive = sets[beta] & ~sets[gamma];
  const int y2 = lowest(exclusive);
  const int y1 = lowest(sets[beta] & ~(1u << (y2 - 1)));
  return {y1, y2};
}

}  // namespace bombprize::classical
