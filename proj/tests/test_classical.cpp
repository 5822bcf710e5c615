#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bombprize/classical/adversary.hpp"
#include "bombprize/classical/bit_channel.hpp"
#include "bombprize/classical/blahut_arimoto.hpp"
#include "bombprize/classical/strategy.hpp"
#include "bombprize/classical/theorem2.hpp"
#include "bombprize/game/game.hpp"
#include "bombprize/numkit/entropy.hpp"
#include "bombprize/numkit/rng.hpp"

using namespace bombprize;
using namespace bombprize::classical;
using game::all_configs;
using numkit::Rational;
using numkit::SplitMix64;

namespace {

ClassicalStrategy constant_strategy(int d, int message, int box) {
  ClassicalStrategy s;
  s.d = d;
  s.dec.resize(d);
  for (int m = 0; m < d; ++m) s.dec[m][box - 1] = Rational(1);
  for (std::size_t i = 0; i < all_configs().size(); ++i) {
    std::vector<Rational> row(d, Rational(0));
    row[message] = Rational(1);
    s.enc.push_back(std::move(row));
  }
  return s;
}

BitChannel random_noisy_channel(SplitMix64& rng) {
  const double p01 = 0.02 + 0.96 * rng.next_double();  // p(0|1)
  const double p10 = 0.02 + 0.96 * rng.next_double();  // p(1|0)
  BitChannel ch;
  ch.p[0][0] = 1.0 - p10;
  ch.p[1][0] = p10;
  ch.p[0][1] = p01;
  ch.p[1][1] = 1.0 - p01;
  return ch;
}

}  // namespace

TEST_CASE("classical evaluation") {
  // constant message, decoder always opens box 1
  const auto d1 = eval_classical(constant_strategy(2, 0, 1));
  for (const auto& c : all_configs()) CHECK(d1.prob(c.bomb, c.prize, 1) == Rational(1));

  // fully randomising decoder
  ClassicalStrategy s = constant_strategy(2, 0, 1);
  for (int m = 0; m < 2; ++m)
    for (int y = 0; y < 4; ++y) s.dec[m][y] = Rational(1, 4);
  const auto d2 = eval_classical(s);
  for (const auto& c : all_configs())
    for (int y = 1; y <= 4; ++y) CHECK(d2.prob(c.bomb, c.prize, y) == Rational(1, 4));
}

TEST_CASE("evaluation through a noisy bit matches brute force") {
  SplitMix64 rng(31);
  ClassicalStrategy s;
  s.d = 2;
  s.dec.resize(2);
  // messages point at boxes 1 and 2, encodings split by bomb parity
  s.dec[0][0] = Rational(1);
  s.dec[1][1] = Rational(1);
  for (const auto& c : all_configs()) {
    std::vector<Rational> row(2, Rational(0));
    const long long a = static_cast<long long>(rng.next_below(4));
    row[0] = Rational(a, 4);
    row[1] = Rational(4 - a, 4);
    s.enc.push_back(std::move(row));
  }
  const BitChannel ch = BitChannel::bsc(0.2);
  const auto fast = eval_classical(s, ch);

  const auto& configs = all_configs();
  for (std::size_t i = 0; i < configs.size(); ++i)
    for (int y = 1; y <= 4; ++y) {
      double expect = 0.0;
      for (int m = 0; m < 2; ++m)
        for (int mp = 0; mp < 2; ++mp)
          expect += s.dec[mp][y - 1].to_double() * ch.p[mp][m] * s.enc[i][m].to_double();
      CHECK(fast.prob(configs[i].bomb, configs[i].prize, y) ==
            doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("shared randomness mixtures are affine") {
  SRStrategy sr;
  sr.components.push_back({Rational(1, 3), constant_strategy(2, 0, 1)});
  sr.components.push_back({Rational(2, 3), constant_strategy(2, 1, 3)});
  const auto mixed = eval_classical(sr);
  for (const auto& c : all_configs()) {
    CHECK(mixed.prob(c.bomb, c.prize, 1) == Rational(1, 3));
    CHECK(mixed.prob(c.bomb, c.prize, 3) == Rational(2, 3));
  }
}

TEST_CASE("ambiguous probability") {
  CHECK(ambiguous_probability(BitChannel::identity()) == 0.0);
  for (double eps : {0.1, 0.3, 0.5})
    CHECK(ambiguous_probability(BitChannel::bsc(eps)) == doctest::Approx(eps).epsilon(1e-15));
  BitChannel constant;  // both inputs land on output 0
  constant.p[0][0] = 1.0;
  constant.p[0][1] = 1.0;
  CHECK(ambiguous_probability(constant) == 1.0);
}

TEST_CASE("symmetrized capacity") {
  const auto sc = symmetrized_capacity(BitChannel::bsc(0.1));
  CHECK(sc.p_sym == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(sc.capacity == doctest::Approx(1.0 - numkit::binary_entropy(0.1)).epsilon(1e-15));
  CHECK(symmetrized_capacity(BitChannel::identity()).capacity == doctest::Approx(1.0));
  CHECK(symmetrized_capacity(BitChannel::bsc(0.5)).capacity == doctest::Approx(0.0));

  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const BitChannel ch = random_noisy_channel(rng);
    CHECK(ambiguous_probability(ch) >= symmetrized_capacity(ch).p_sym - 1e-12);
  }
}

TEST_CASE("blahut-arimoto") {
  std::vector<std::vector<double>> not4(4, std::vector<double>(4, 1.0 / 3.0));
  for (int k = 0; k < 4; ++k) not4[k][k] = 0.0;
  CHECK(blahut_arimoto(not4) == doctest::Approx(2.0 - std::log2(3.0)).epsilon(1e-6));

  CHECK(blahut_arimoto({{1.0, 0.0}, {0.0, 1.0}}) == doctest::Approx(1.0).epsilon(1e-8));

  CHECK(blahut_arimoto({{0.9, 0.1}, {0.1, 0.9}}) ==
        doctest::Approx(1.0 - numkit::binary_entropy(0.1)).epsilon(1e-6));

  CHECK_THROWS_AS(blahut_arimoto({{0.5, 0.2}, {0.2, 0.2}}), std::invalid_argument);
}

TEST_CASE("adversarial bomb search") {
  CHECK(adversarial_bomb_search(BitChannel::identity(), 8, 1) == doctest::Approx(0.0));

  const double v25 = adversarial_bomb_search(BitChannel::bsc(0.25), 16, 2);
  const double c25 = symmetrized_capacity(BitChannel::bsc(0.25)).capacity;
  CHECK(v25 >= game::theorem1_bound(c25) - 1e-12);
  CHECK(v25 == doctest::Approx(0.125).epsilon(1e-3));  // quarter of the flip weight

  const double v50 = adversarial_bomb_search(BitChannel::bsc(0.5), 16, 3);
  CHECK(v50 >= 1.0 / 16.0);

  SplitMix64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const BitChannel ch = random_noisy_channel(rng);
    const double v = adversarial_bomb_search(ch, 4, rng.next());
    CHECK(v >= game::theorem1_bound(symmetrized_capacity(ch).capacity) - 1e-12);
  }
}

TEST_CASE("exhaustive enumeration, d = 2") {
  const auto report = enumerate_theorem2(2, 500, 101);
  CHECK(report.decodings == 16);
  CHECK(report.encodings_considered == 16ull * 4096ull);
  CHECK(report.bomb_avoiding > 0);
  CHECK(report.prize_certain == 0);
  CHECK(report.stochastic_failures == 0);
  CHECK(report.pass());
}

TEST_CASE("d = 4 transmits the prize") {
  const auto dist = eval_classical(send_prize_strategy());
  CHECK(game::worst_prize(dist).value == Rational(1));
  CHECK(game::worst_bomb(dist).value == Rational(0));
}

TEST_CASE("sampled bomb-avoiding strategies lose somewhere, exactly") {
  SplitMix64 rng(7);
  for (int d : {2, 3})
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = sample_bomb_avoiding_strategy(d, rng);
      const auto dist = eval_classical(s);
      CHECK(game::worst_bomb(dist).value == Rational(0));
      CHECK(game::worst_prize(dist).value == Rational(0));
    }
}

namespace {

// Exhaustive oracle: over all support-respecting bomb-avoiding deterministic
// strategies, no one may open box x at configuration (b, x); at least one
// such strategy has to exist.
void check_witness(const std::vector<std::vector<int>>& supports, const game::GameConfig& w) {
  REQUIRE(game::valid_config(w.bomb, w.prize));
  bool some_strategy = true;
  for (int b = 1; b <= 4; ++b) {
    bool avoidable = false;
    for (const auto& s : supports)
      if (std::find(s.begin(), s.end(), b) == s.end()) avoidable = true;
    if (!avoidable) some_strategy = false;
  }
  CHECK(some_strategy);
  for (std::size_t m = 0; m < supports.size(); ++m) {
    const bool bomb_free =
        std::find(supports[m].begin(), supports[m].end(), w.bomb) == supports[m].end();
    const bool opens_prize =
        std::find(supports[m].begin(), supports[m].end(), w.prize) != supports[m].end();
    const bool prize_reachable = bomb_free && opens_prize;
    CHECK_FALSE(prize_reachable);  // no usable message reaches the prize
  }

  // end-to-end sweep: decoders uniform on the given supports, every
  // bomb-avoiding encoder choice at the witness configuration, exact zeros
  const int d = static_cast<int>(supports.size());
  const auto usable = [&](int b) {
    std::vector<int> ms;
    for (int m = 0; m < d; ++m)
      if (std::find(supports[m].begin(), supports[m].end(), b) == supports[m].end())
        ms.push_back(m);
    return ms;
  };
  for (int witness_message : usable(w.bomb)) {
    ClassicalStrategy s;
    s.d = d;
    s.dec.resize(d);
    for (int m = 0; m < d; ++m)
      for (int y : supports[m])
        s.dec[m][y - 1] = Rational(1, static_cast<long long>(supports[m].size()));
    for (const auto& c : all_configs()) {
      std::vector<Rational> row(d, Rational(0));
      const bool at_witness = c.bomb == w.bomb && c.prize == w.prize;
      row[at_witness ? witness_message : usable(c.bomb).front()] = Rational(1);
      s.enc.push_back(std::move(row));
    }
    const auto dist = eval_classical(s);
    CHECK(game::worst_bomb(dist).value == Rational(0));
    CHECK(dist.prob(w.bomb, w.prize, w.prize) == Rational(0));
  }
}

}  // namespace

TEST_CASE("zero-prize witnesses") {
  // union misses box 4
  auto w = zero_prize_witness({{1}, {2}, {3}});
  CHECK(w.prize == 4);
  check_witness({{1}, {2}, {3}}, w);

  // two messages share two boxes
  w = zero_prize_witness({{1, 2}, {1, 3}, {4}});
  check_witness({{1, 2}, {1, 3}, {4}}, w);

  // singleton branch
  w = zero_prize_witness({{1}, {2, 3}, {4}});
  check_witness({{1}, {2, 3}, {4}}, w);

  CHECK_THROWS_AS(zero_prize_witness({{1, 2}, {2, 3}, {2, 4}}), std::invalid_argument);

  // randomised cross-check against the oracle
  SplitMix64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_below(2));
    std::vector<std::vector<int>> supports;
    unsigned meet = 0xF;
    for (int m = 0; m < d; ++m) {
      const unsigned mask = static_cast<unsigned>(rng.next_below(15) + 1);
      meet &= mask;
      std::vector<int> boxes;
      for (int y = 0; y < 4; ++y)
        if (mask >> y & 1u) boxes.push_back(y + 1);
      supports.push_back(std::move(boxes));
    }
    if (meet != 0) {
      CHECK_THROWS_AS(zero_prize_witness(supports), std::invalid_argument);
      continue;
    }
    check_witness(supports, zero_prize_witness(supports));
  }
}
