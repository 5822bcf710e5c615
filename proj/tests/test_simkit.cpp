#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bombprize/game/game.hpp"
#include "bombprize/game/quantum_protocol.hpp"
#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/capacity.hpp"
#include "bombprize/qchannel/random.hpp"
#include "bombprize/simkit/protocols.hpp"
#include "bombprize/simkit/strategy_matrix.hpp"
#include "bombprize/simkit/uniqueness.hpp"

using namespace bombprize;
using namespace bombprize::simkit;
using numkit::CMatrix;
using numkit::Rational;
using numkit::SplitMix64;

TEST_CASE("classical flip table") {
  const StrategyMatrix m = classical_not();
  CHECK(m.at(1, 1) == Rational(0));
  CHECK(m.at(2, 1) == Rational(1, 3));
  m.validate();
  CHECK(m.is_off_diagonal());

  // json round trip carries exact entries
  CHECK(StrategyMatrix::from_json(m.to_json()) == m);
}

TEST_CASE("trit protocol") {
  CHECK(trit_protocol_distribution() == classical_not());

  // matched trits i = j = 1, bomb in box 1: mass splits over boxes 3 and 4
  const StrategyMatrix b1 = trit_branch(1);
  CHECK(b1.at(3, 1) == Rational(1, 2));
  CHECK(b1.at(4, 1) == Rational(1, 2));
  CHECK(b1.at(1, 1) == Rational(0));
  CHECK(b1.at(2, 1) == Rational(0));

  CHECK(trit_encode(1, 1) == 1);
  CHECK(trit_encode(1, 2) == 1);
  CHECK(trit_encode(1, 3) == 0);
  CHECK(trit_decode_prob(2, 3, 0) == Rational(1, 2));
}

TEST_CASE("subtype catalogue") {
  const auto& all = SubtypeId::all();
  CHECK(all.size() == 25);
  int count11 = 0, count12 = 0, count13 = 0, count22 = 0;
  for (const auto& s : all) {
    const auto t = s.type();
    if (t == std::pair<int, int>(1, 1)) ++count11;
    if (t == std::pair<int, int>(1, 2)) ++count12;
    if (t == std::pair<int, int>(1, 3)) ++count13;
    if (t == std::pair<int, int>(2, 2)) ++count22;
  }
  CHECK(count11 == 6);
  CHECK(count12 == 12);
  CHECK(count13 == 4);
  CHECK(count22 == 3);
  CHECK(SubtypeId({2, 3}, {1}).name() == "1|23");  // singleton side first
}

TEST_CASE("subtype matrices") {
  const SubtypeId s12({1}, {2});
  const StrategyMatrix m12 = subtype_matrix(s12, Rational(0), Rational(0));
  // free inputs forced into row 2
  CHECK(m12.at(2, 3) == Rational(1));
  CHECK(m12.at(2, 4) == Rational(1));
  CHECK(m12.at(2, 1) == Rational(1));
  CHECK(m12.at(1, 2) == Rational(1));

  const SubtypeId s2234({1, 2}, {3, 4});
  const StrategyMatrix m22 = subtype_matrix(s2234, Rational(1, 2), Rational(1, 2));
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b)
      if (!m22.at(y, b).is_zero()) CHECK(m22.at(y, b) == Rational(1, 2));

  const SubtypeId s1234({1}, {2, 3, 4});
  const StrategyMatrix m13 = subtype_matrix(s1234, Rational(1, 3), Rational(1, 3));
  CHECK(m13.at(1, 1) == Rational(0));
  CHECK(m13.at(2, 1) == Rational(1, 3));
  CHECK(m13.at(3, 1) == Rational(1, 3));
  CHECK(m13.at(4, 1) == Rational(1, 3));

  CHECK_THROWS_AS(subtype_matrix(s1234, Rational(2, 3), Rational(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(subtype_matrix(s12, Rational(3, 2), Rational(0)), std::invalid_argument);
}

TEST_CASE("subtype matrices pinned entry by entry") {
  const auto R = [](long long n, long long d) { return Rational(n, d); };
  const Rational p(2, 7), r(3, 5);

  // {2} | {3,4}: columns are (free, singleton, pair, pair)
  const StrategyMatrix m234 = subtype_matrix(SubtypeId({2}, {3, 4}), p, r);
  const Rational e234[4][4] = {
      {R(0, 1), R(0, 1), R(0, 1), R(0, 1)},
      {Rational(1) - r, R(0, 1), R(1, 1), R(1, 1)},
      {r * p, p, R(0, 1), R(0, 1)},
      {r * (Rational(1) - p), Rational(1) - p, R(0, 1), R(0, 1)}};
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) CHECK(m234.at(y, b) == e234[y - 1][b - 1]);

  // {4} | {2,3}
  const StrategyMatrix m423 = subtype_matrix(SubtypeId({4}, {2, 3}), p, r);
  const Rational e423[4][4] = {
      {R(0, 1), R(0, 1), R(0, 1), R(0, 1)},
      {r * p, R(0, 1), R(0, 1), p},
      {r * (Rational(1) - p), R(0, 1), R(0, 1), Rational(1) - p},
      {Rational(1) - r, R(1, 1), R(1, 1), R(0, 1)}};
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) CHECK(m423.at(y, b) == e423[y - 1][b - 1]);

  // {3} | {1,4}
  const StrategyMatrix m314 = subtype_matrix(SubtypeId({3}, {1, 4}), p, r);
  const Rational e314[4][4] = {
      {R(0, 1), r * p, p, R(0, 1)},
      {R(0, 1), R(0, 1), R(0, 1), R(0, 1)},
      {R(1, 1), Rational(1) - r, R(0, 1), R(1, 1)},
      {R(0, 1), r * (Rational(1) - p), Rational(1) - p, R(0, 1)}};
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) CHECK(m314.at(y, b) == e314[y - 1][b - 1]);

  // {1,3} | {2,4}
  const StrategyMatrix m1324 = subtype_matrix(SubtypeId({1, 3}, {2, 4}), p, r);
  const Rational e1324[4][4] = {
      {R(0, 1), r, R(0, 1), r},
      {p, R(0, 1), p, R(0, 1)},
      {R(0, 1), Rational(1) - r, R(0, 1), Rational(1) - r},
      {Rational(1) - p, R(0, 1), Rational(1) - p, R(0, 1)}};
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) CHECK(m1324.at(y, b) == e1324[y - 1][b - 1]);
}

TEST_CASE("classification inverts the subtype generator") {
  const Rational p(1, 3), r(2, 5);  // interior, so supports stay full
  for (const auto& s : SubtypeId::all()) {
    const StrategyMatrix target = subtype_matrix(s, p, r);

    // realise the matrix as an explicit encoder/decoder pair
    BitStrategy strat;
    const auto& l = s.side0();
    const auto& rgt = s.side1();
    const auto in = [](const std::vector<int>& v, int b) {
      return std::find(v.begin(), v.end(), b) != v.end();
    };
    for (int b = 1; b <= 4; ++b) {
      if (in(l, b)) {
        strat.enc[b - 1][1] = Rational(1);
      } else if (in(rgt, b)) {
        strat.enc[b - 1][0] = Rational(1);
      } else {
        // mixing weight toward message 0 comes straight off the matrix
        Rational to_l(0);
        for (int y : l) to_l += target.at(y, b);
        strat.enc[b - 1][0] = to_l;
        strat.enc[b - 1][1] = Rational(1) - to_l;
      }
    }
    // decoder rows match the columns the matrix prescribes
    {
      const int probe = rgt[0];  // b in side1 -> message 0 -> open side0
      for (int y : l) strat.dec[0][y - 1] = target.at(y, probe);
      const int probe1 = l[0];
      for (int y : rgt) strat.dec[1][y - 1] = target.at(y, probe1);
    }
    CHECK(strat.to_matrix() == target);
    const auto id = classify_strategy(strat);
    REQUIRE(id.has_value());
    CHECK(*id == s);
  }
}

TEST_CASE("subtype matrices: stochastic, off-diagonal, extremal entries") {
  const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                   Rational(1)};
  for (const auto& s : SubtypeId::all()) {
    const auto type = s.type();
    for (const auto& p : grid)
      for (const auto& r : grid) {
        if (type == std::pair<int, int>(1, 3) && p + r > Rational(1)) continue;
        const StrategyMatrix m = subtype_matrix(s, p, r);
        m.validate();
        CHECK(m.is_off_diagonal());
        if (type != std::pair<int, int>(2, 2)) {
          bool has_one = false;
          for (int y = 1; y <= 4; ++y)
            for (int b = 1; b <= 4; ++b)
              if (y != b && m.at(y, b) == Rational(1)) has_one = true;
          CHECK(has_one);
        }
      }
  }

  // a (2,2) matrix shares a structural off-diagonal zero with every matrix
  // of another type (generic interior parameters expose exactly the
  // structural zeros)
  const Rational gp(1, 3), gr(1, 3);
  for (const auto& a : SubtypeId::all()) {
    if (a.type() != std::pair<int, int>(2, 2)) continue;
    const StrategyMatrix ma = subtype_matrix(a, gp, gr);
    for (const auto& b : SubtypeId::all()) {
      if (b.type() == std::pair<int, int>(2, 2)) continue;
      const StrategyMatrix mb = subtype_matrix(b, gp, gr);
      bool shared_zero = false;
      for (int y = 1; y <= 4; ++y)
        for (int c = 1; c <= 4; ++c)
          if (y != c && ma.at(y, c).is_zero() && mb.at(y, c).is_zero()) shared_zero = true;
      CHECK(shared_zero);
    }
  }
}

TEST_CASE("strategy classification") {
  BitStrategy s;
  // decoder: message 0 -> box 1, message 1 -> box 2
  s.dec[0][0] = Rational(1);
  s.dec[1][1] = Rational(1);
  // encoder avoids self-hits: bomb 1 -> message 1, bomb 2 -> message 0, rest free
  s.enc[0][1] = Rational(1);
  s.enc[1][0] = Rational(1);
  s.enc[2][0] = Rational(1, 2);
  s.enc[2][1] = Rational(1, 2);
  s.enc[3][0] = Rational(1);
  auto id = classify_strategy(s);
  REQUIRE(id.has_value());
  CHECK(*id == SubtypeId({1}, {2}));
  CHECK(id->type() == std::pair<int, int>(1, 1));

  BitStrategy t;
  t.dec[0][0] = Rational(1, 2);
  t.dec[0][1] = Rational(1, 2);
  t.dec[1][2] = Rational(1, 2);
  t.dec[1][3] = Rational(1, 2);
  t.enc[0][1] = Rational(1);
  t.enc[1][1] = Rational(1);
  t.enc[2][0] = Rational(1);
  t.enc[3][0] = Rational(1);
  id = classify_strategy(t);
  REQUIRE(id.has_value());
  CHECK(id->type() == std::pair<int, int>(2, 2));

  // overlapping decoder supports put a bomb hit on the diagonal
  BitStrategy u;
  u.dec[0][0] = Rational(1, 2);
  u.dec[0][1] = Rational(1, 2);
  u.dec[1][1] = Rational(1, 2);
  u.dec[1][2] = Rational(1, 2);
  for (int b = 0; b < 4; ++b) u.enc[b][0] = Rational(1);
  CHECK_FALSE(classify_strategy(u).has_value());
}

TEST_CASE("pair mixtures never reach the flip table") {
  const auto report = theorem5_pairs();
  CHECK(report.total == 325);
  CHECK(report.feasible == 0);

  // spot check the singleton-pair example directly
  const auto r = solve_mixture({SubtypeId({1}, {2}), SubtypeId({3}, {4})}, classical_not());
  CHECK_FALSE(r.feasible);

  // a repeated subtype merges into a single component: still infeasible
  const auto rr = solve_mixture(
      {SubtypeId({1, 2}, {3, 4}), SubtypeId({1, 2}, {3, 4}), SubtypeId({1, 3}, {2, 4})},
      classical_not());
  CHECK_FALSE(rr.feasible);
}

TEST_CASE("triple mixtures force uniform weights") {
  const auto report = theorem5_triples();
  CHECK(report.total == 2300);
  CHECK(report.feasible > 0);
  CHECK(report.all_weights_uniform);

  // the all-(2,2) triple takes p = r = 1/2 on every component
  bool found = false;
  for (const auto& t : report.feasible_triples) {
    bool all22 = true;
    for (const auto& s : t.subtypes)
      if (s.type() != std::pair<int, int>(2, 2)) all22 = false;
    if (!all22) continue;
    found = true;
    REQUIRE(t.result.unique_solution);
    for (int i = 0; i < 3; ++i) {
      CHECK(t.result.q[i] == Rational(1, 3));
      CHECK(t.result.p[i] == Rational(1, 2));
      CHECK(t.result.r[i] == Rational(1, 2));
    }
  }
  CHECK(found);
}

TEST_CASE("one-bit simulation of the universal flip") {
  const auto sim = unot_bit_simulation();
  CHECK(numkit::distance_frobenius(sim.choi(), qchannel::unot().choi()) < 1e-12);

  const CMatrix p0 = numkit::outer(numkit::basis_ket(2, 0), numkit::basis_ket(2, 0));
  const CMatrix out = sim.apply(p0);
  CHECK(out(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(out(1, 1).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

  const CMatrix half = 0.5 * CMatrix::identity(2);
  CHECK(numkit::distance_frobenius(sim.apply(half), half) < 1e-14);

  // fixed trit 3 measures Z: |0> flips to |1> with certain outcome 0
  const auto branch = unot_bit_branch(3);
  const CMatrix p1 = numkit::outer(numkit::basis_ket(2, 1), numkit::basis_ket(2, 1));
  CHECK(numkit::distance_frobenius(branch.apply(p0), p1) < 1e-14);

  SplitMix64 rng(12);
  int seen_z = 0;
  for (int t = 0; t < 200; ++t) {
    const auto tr = sample_unot_bit(p0, rng);
    if (tr.basis != 3) continue;
    ++seen_z;
    CHECK(tr.outcome == 0);
    CHECK(numkit::distance_frobenius(tr.prepared, p1) < 1e-14);
  }
  CHECK(seen_z > 20);
}

TEST_CASE("measure-and-prepare simulation") {
  // uniform X, Y, Z flip mixture reproduces the universal flip
  CQMixture xyz;
  for (int i = 1; i <= 3; ++i) {
    const auto basis = qchannel::pauli_eigenbasis(i);
    xyz.components.push_back(
        {1.0 / 3.0,
         {basis, numkit::outer(basis.ket1, basis.ket1), numkit::outer(basis.ket0, basis.ket0)}});
  }
  CHECK(numkit::distance_frobenius(eb_simulation(xyz).choi(), qchannel::unot().choi()) < 1e-13);

  // single component: the channel itself
  SplitMix64 rng(3);
  const auto basis = qchannel::random_basis(rng);
  qchannel::CQChannel c{basis, numkit::random_density(2, rng), numkit::random_density(2, rng)};
  CQMixture single{{{1.0, c}}};
  CHECK(numkit::distance_frobenius(eb_simulation(single).choi(), qchannel::cq(c).choi()) < 1e-13);

  // two components against the averaged Choi states
  qchannel::CQChannel c2{qchannel::random_basis(rng), numkit::random_density(2, rng),
                         numkit::random_density(2, rng)};
  CQMixture pair{{{0.3, c}, {0.7, c2}}};
  CMatrix expect = qchannel::cq(c).choi();
  expect *= numkit::Complex{0.3, 0.0};
  CMatrix other = qchannel::cq(c2).choi();
  other *= numkit::Complex{0.7, 0.0};
  expect += other;
  CHECK(numkit::distance_frobenius(eb_simulation(pair).choi(), expect) < 1e-13);

  // transcripts draw components by weight and prepare the recorded outputs
  const CMatrix p0 = numkit::outer(numkit::basis_ket(2, 0), numkit::basis_ket(2, 0));
  int first = 0;
  for (int t = 0; t < 300; ++t) {
    const auto tr = sample_eb(pair, p0, rng);
    if (tr.component == 1) ++first;
    const auto& comp = pair.components[tr.component - 1];
    CHECK(numkit::distance_frobenius(tr.prepared,
                                     tr.outcome == 0 ? comp.cq.sigma0 : comp.cq.sigma1) == 0.0);
  }
  CHECK(first > 40);
  CHECK(first < 160);
}

TEST_CASE("unit-capacity components, sub-unit mixture") {
  CQMixture xyz;
  for (int i = 1; i <= 3; ++i) {
    const auto basis = qchannel::pauli_eigenbasis(i);
    xyz.components.push_back(
        {1.0 / 3.0,
         {basis, numkit::outer(basis.ket1, basis.ket1), numkit::outer(basis.ket0, basis.ket0)}});
  }
  const auto report = noisy_ruskai_check(xyz);
  REQUIRE(report.component_capacities.size() == 3);
  for (double c : report.component_capacities) CHECK(c == 1.0);
  CHECK(report.components_all_unit);
  CHECK(report.mixture_capacity == doctest::Approx(2.0 - std::log2(3.0)).epsilon(1e-3));
  CHECK(report.mixture_below_unit);

  // single-component mixtures carry a clean bit and are rejected
  CQMixture single{{{1.0, xyz.components[0].cq}}};
  CHECK_THROWS_AS(noisy_ruskai_check(single), std::invalid_argument);

  // 50/50 two-basis mixture
  CQMixture two{{xyz.components[0], xyz.components[2]}};
  two.components[0].weight = 0.5;
  two.components[1].weight = 0.5;
  const auto r2 = noisy_ruskai_check(two);
  CHECK(r2.components_all_unit);
  CHECK(r2.mixture_capacity < 1.0);
}

TEST_CASE("dense coding matches the flip table exactly") {
  const auto dist =
      game::eval_quantum_protocol(game::dense_coding_protocol(qchannel::unot()));
  const StrategyMatrix expect = classical_not();
  for (const auto& c : game::all_configs())
    for (int y = 1; y <= 4; ++y)
      CHECK(dist.prob(c.bomb, c.prize, y) ==
            doctest::Approx(expect.at(y, c.bomb).to_double()).epsilon(1e-12));
}
