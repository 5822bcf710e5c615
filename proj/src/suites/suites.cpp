#include "bombprize/suites/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bombprize/classical/adversary.hpp"
#include "bombprize/classical/bit_channel.hpp"
#include "bombprize/classical/blahut_arimoto.hpp"
#include "bombprize/classical/theorem2.hpp"
#include "bombprize/game/game.hpp"
#include "bombprize/game/quantum_protocol.hpp"
#include "bombprize/numkit/entropy.hpp"
#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/random.hpp"
#include "bombprize/simkit/protocols.hpp"
#include "bombprize/simkit/uniqueness.hpp"

namespace bombprize::suites {

using numkit::Rational;
using numkit::SplitMix64;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void add(SuiteReport& r, const std::string& name, const std::string& expected,
         const std::string& actual, double tol, bool pass) {
  r.checks.push_back({name, expected, actual, tol, pass});
}

void add_near(SuiteReport& r, const std::string& name, double expected, double actual,
              double tol) {
  add(r, name, fmt(expected), fmt(actual), tol, std::abs(actual - expected) <= tol);
}

void add_le(SuiteReport& r, const std::string& name, double actual, double bound) {
  add(r, name, "<= " + fmt(bound), fmt(actual), bound, actual <= bound);
}

void add_flag(SuiteReport& r, const std::string& name, bool pass, const std::string& actual) {
  add(r, name, "true", actual, 0.0, pass);
}

const double kUnotCapacity = 2.0 - std::log2(3.0);

simkit::CQMixture uniform_xyz_mixture() {
  simkit::CQMixture m;
  for (int i = 1; i <= 3; ++i) {
    const auto basis = qchannel::pauli_eigenbasis(i);
    m.components.push_back(
        {1.0 / 3.0,
         {basis, numkit::outer(basis.ket1, basis.ket1), numkit::outer(basis.ket0, basis.ket0)}});
  }
  return m;
}

void protocol2_checks(SuiteReport& r) {
  const double dist =
      numkit::distance_frobenius(simkit::unot_bit_simulation().choi(), qchannel::unot().choi());
  add_le(r, "bit+trits simulation reaches the universal flip (choi distance)", dist, 1e-12);
}

void protocol3_checks(SuiteReport& r, std::uint64_t seed, const ScaleOptions& opts) {
  SplitMix64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < opts.cq_mixtures; ++trial) {
    const int parts = 1 + static_cast<int>(rng.next_below(3));
    simkit::CQMixture m;
    double sum = 0.0;
    for (int i = 0; i < parts; ++i) {
      simkit::CQMixture::Component c{rng.next_double() + 0.1,
                                     {qchannel::random_basis(rng), numkit::random_density(2, rng),
                                      numkit::random_density(2, rng)}};
      sum += c.weight;
      m.components.push_back(std::move(c));
    }
    for (auto& c : m.components) c.weight /= sum;

    numkit::CMatrix expect(4, 4);
    for (const auto& c : m.components) {
      numkit::CMatrix part = qchannel::cq(c.cq).choi();
      part *= numkit::Complex{c.weight, 0.0};
      expect += part;
    }
    worst = std::max(worst,
                     numkit::distance_frobenius(simkit::eb_simulation(m).choi(), expect));
  }
  add_le(r,
         "measure-and-prepare simulation equals the weighted choi average (max distance, " +
             std::to_string(opts.cq_mixtures) + " mixtures)",
         worst, 1e-13);
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json SuiteReport::to_json(bool include_timing) const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  nlohmann::json out{{"suite", suite},
                     {"seed", seed},
                     {"checks", checks_json},
                     {"pass", passed()}};
  if (include_timing) out["wall_seconds"] = wall_seconds;
  return out;
}

SuiteReport capacity_unot(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"capacity_unot", seed, {}, 0};
  Timer t;
  add_near(r, "closed-form capacity of the universal flip", kUnotCapacity,
           qchannel::ce_pauli({0, 1.0 / 3, 1.0 / 3, 1.0 / 3}), 1e-14);
  Timer tn;
  const double numeric = qchannel::ce_numerical(qchannel::unot(), opts.ce);
  const double elapsed = tn.seconds();
  add_near(r, "numerical capacity of the universal flip", kUnotCapacity, numeric, 1e-3);
  add_le(r, "numerical capacity runtime (s)", elapsed, 5.0);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport dense_coding_worst_case(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"dense_coding_worst_case", seed, {}, 0};
  Timer t;
  const auto d =
      game::eval_quantum_protocol(game::dense_coding_protocol(qchannel::unot()));
  add_le(r, "worst-case bomb probability, universal flip", game::worst_bomb(d).value, 1e-12);
  add_near(r, "worst-case prize probability, universal flip", 1.0 / 3.0,
           game::worst_prize(d).value, 1e-12);

  const auto id =
      game::eval_quantum_protocol(game::dense_coding_protocol(qchannel::identity_channel()));
  double min_hit = 1.0;
  for (const auto& c : game::all_configs())
    min_hit = std::min(min_hit, id.prob(c.bomb, c.prize, c.bomb));
  add_near(r, "noiseless channel reveals the bomb label", 1.0, min_hit, 1e-12);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport exhaustive_small_alphabets(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"exhaustive_small_alphabets", seed, {}, 0};
  Timer t;
  SplitMix64 rng(seed);

  const auto d2 = classical::enumerate_theorem2(2, opts.stochastic_strategies, rng.next());
  add(r, "d=2: bomb-avoiding deterministic strategies with certain prize",
      "0 of " + fmt(d2.bomb_avoiding), fmt(d2.prize_certain), 0, d2.prize_certain == 0);
  add(r, "d=2: sampled stochastic bomb-avoiding strategies with nonzero worst prize",
      "0 of " + std::to_string(d2.stochastic_samples), std::to_string(d2.stochastic_failures), 0,
      d2.stochastic_failures == 0);

  if (opts.thm2_include_d3) {
    Timer t3;
    const auto d3 = classical::enumerate_theorem2(3, opts.stochastic_strategies, rng.next());
    const double elapsed = t3.seconds();
    add(r, "d=3: bomb-avoiding deterministic strategies with certain prize",
        "0 of " + fmt(d3.bomb_avoiding), fmt(d3.prize_certain), 0, d3.prize_certain == 0);
    add(r, "d=3: sampled stochastic bomb-avoiding strategies with nonzero worst prize",
        "0 of " + std::to_string(d3.stochastic_samples), std::to_string(d3.stochastic_failures),
        0, d3.stochastic_failures == 0);
    add_le(r, "d=3 enumeration runtime (s)", elapsed, 60.0);
  }

  const auto d4 = classical::eval_classical(classical::send_prize_strategy());
  add_flag(r, "d=4: transmitting the prize location wins always",
           game::worst_prize(d4).value == Rational(1) &&
               game::worst_bomb(d4).value == Rational(0),
           game::worst_prize(d4).value.to_string());
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport noisy_bit_bound_chain(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"noisy_bit_bound_chain", seed, {}, 0};
  Timer t;
  SplitMix64 rng(seed);
  int chain_violations = 0, bound_violations = 0;
  double min_margin = 1.0;
  for (int trial = 0; trial < opts.bit_channels; ++trial) {
    classical::BitChannel ch;
    const double p01 = 0.02 + 0.96 * rng.next_double();
    const double p10 = 0.02 + 0.96 * rng.next_double();
    ch.p[0][0] = 1.0 - p10;
    ch.p[1][0] = p10;
    ch.p[0][1] = p01;
    ch.p[1][1] = 1.0 - p01;

    const auto sym = classical::symmetrized_capacity(ch);
    const double ambiguous = classical::ambiguous_probability(ch);
    const double bound = game::theorem1_bound(sym.capacity);
    // bound <= p_sym / 4 <= p_? / 4
    if (ambiguous < sym.p_sym - 1e-12 || sym.p_sym / 4.0 < bound - 1e-12 ||
        ambiguous / 4.0 < sym.p_sym / 4.0 - 1e-12)
      ++chain_violations;
    const double searched = classical::adversarial_bomb_search(ch, opts.restarts, rng.next());
    if (searched < bound - 1e-12) ++bound_violations;
    min_margin = std::min(min_margin, searched - bound);
  }
  add(r, "bound chain through the symmetrised and ambiguous weights",
      "0 violations of " + std::to_string(opts.bit_channels), std::to_string(chain_violations),
      0, chain_violations == 0);
  add(r, "searched bomb probability under the capacity bound",
      "0 violations of " + std::to_string(opts.bit_channels), std::to_string(bound_violations),
      0, bound_violations == 0);
  add(r, "smallest margin over the bound", ">= 0", fmt(min_margin), 0, min_margin >= -1e-12);

  int topsoe_violations = 0;
  const double e = 1.0 / std::log(4.0);
  for (int i = 1; i <= 99; ++i) {
    const double p = i / 100.0;
    if (numkit::binary_entropy(p) > std::pow(4.0 * p * (1.0 - p), e) + 1e-12)
      ++topsoe_violations;
  }
  add(r, "binary entropy under the 4p(1-p) power bound (99-point grid)", "0 violations",
      std::to_string(topsoe_violations), 0, topsoe_violations == 0);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport classical_not_capacity(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"classical_not_capacity", seed, {}, 0};
  Timer t;
  std::vector<std::vector<double>> w(4, std::vector<double>(4, 1.0 / 3.0));
  for (int k = 0; k < 4; ++k) w[k][k] = 0.0;
  Timer tb;
  const double cap = classical::blahut_arimoto(w);
  const double elapsed = tb.seconds();
  add_near(r, "blahut-arimoto capacity of the 4-box flip table", kUnotCapacity, cap, 1e-6);
  add_le(r, "blahut-arimoto runtime (s)", elapsed, 1.0);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport trit_simulation(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"trit_simulation", seed, {}, 0};
  Timer t;
  const bool equal = simkit::trit_protocol_distribution() == simkit::classical_not();
  add_flag(r, "trit protocol reproduces the flip table entrywise, exact", equal,
           equal ? "equal" : "differs");
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport strategy_matrix_uniqueness(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"strategy_matrix_uniqueness", seed, {}, 0};
  Timer t;
  const auto pairs = simkit::theorem5_pairs();
  add(r, "feasible subtype pairs", "0 of " + std::to_string(pairs.total),
      std::to_string(pairs.feasible), 0, pairs.feasible == 0);

  const auto triples = simkit::theorem5_triples();
  add(r, "feasible subtype triples", "> 0 of " + std::to_string(triples.total),
      std::to_string(triples.feasible), 0, triples.feasible > 0);
  add_flag(r, "every feasible triple forces weights (1/3, 1/3, 1/3)",
           triples.all_weights_uniform, triples.all_weights_uniform ? "uniform" : "non-uniform");

  bool found = false, halves = false;
  for (const auto& tr : triples.feasible_triples) {
    bool all22 = true;
    for (const auto& s : tr.subtypes)
      if (s.type() != std::pair<int, int>(2, 2)) all22 = false;
    if (!all22) continue;
    found = true;
    halves = tr.result.unique_solution;
    for (int i = 0; i < 3 && halves; ++i)
      halves = tr.result.p[i] == Rational(1, 2) && tr.result.r[i] == Rational(1, 2);
  }
  add_flag(r, "the all-(2,2) triple is feasible with p = r = 1/2", found && halves,
           found ? (halves ? "1/2 everywhere" : "other parameters") : "missing");
  add_le(r, "uniqueness sweep runtime (s)", t.seconds(), 30.0);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport degradation_structure(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"degradation_structure", seed, {}, 0};
  Timer t;
  add_near(r, "basis flip degrades to the universal flip with weight 2/3", 2.0 / 3.0,
           qchannel::max_degradation_weight(qchannel::cq_not(qchannel::basis_z()),
                                            qchannel::unot()),
           1e-8);
  add_near(r, "self degradation weight", 1.0,
           qchannel::max_degradation_weight(qchannel::unot(), qchannel::unot()), 0.0);
  add_near(r, "noiseless channel carries no universal-flip weight", 0.0,
           qchannel::max_degradation_weight(qchannel::identity_channel(), qchannel::unot()),
           1e-8);

  SplitMix64 rng(seed);
  int multi_failures = 0;
  for (int trial = 0; trial < opts.not_mixtures; ++trial) {
    auto m = qchannel::random_not_mixture(rng, 2, 4);
    while (!m.is_quantum()) m = qchannel::random_not_mixture(rng, 2, 4);
    if (!qchannel::is_quantum_not_channel(qchannel::not_mixture(m))) ++multi_failures;
  }
  add(r, "multi-basis flip mixtures recognised as quantum flips",
      "0 failures of " + std::to_string(opts.not_mixtures), std::to_string(multi_failures), 0,
      multi_failures == 0);

  int single_failures = 0;
  for (int i = 1; i <= 3; ++i)
    if (qchannel::is_quantum_not_channel(qchannel::cq_not(qchannel::pauli_eigenbasis(i))))
      ++single_failures;
  for (int trial = 0; trial < 10; ++trial) {
    const auto ch = qchannel::cq_not(qchannel::random_basis(rng));
    if (!qchannel::is_not_channel(ch) || qchannel::is_quantum_not_channel(ch))
      ++single_failures;
  }
  add(r, "single-basis flips recognised as classical flips", "0 failures of 13",
      std::to_string(single_failures), 0, single_failures == 0);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport average_scenario(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"average_scenario", seed, {}, 0};
  Timer t;
  const auto uniform = game::Prior::uniform();
  const auto s2 = game::optimal_average_strategy(uniform, 2);
  add_flag(r, "uniform prior, two messages: average prize exactly 1/2",
           s2.value == Rational(1, 2) && game::avg_bomb(s2.distribution, uniform) == Rational(0),
           s2.value.to_string());
  const auto s3 = game::optimal_average_strategy(uniform, 3);
  add_flag(r, "uniform prior, three messages: average prize exactly 3/4",
           s3.value == Rational(3, 4) && game::avg_bomb(s3.distribution, uniform) == Rational(0),
           s3.value.to_string());
  add_near(r, "average bomb bound at zero capacity, uniform prior", 1.0 / 16.0,
           game::theorem1ave_bound(0.0, uniform), 1e-15);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport channel_simulations(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"channel_simulations", seed, {}, 0};
  Timer t;
  protocol2_checks(r);
  protocol3_checks(r, seed, opts);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport ruskai_mixture(std::uint64_t seed, const ScaleOptions&) {
  SuiteReport r{"ruskai_mixture", seed, {}, 0};
  Timer t;
  const auto report = simkit::noisy_ruskai_check(uniform_xyz_mixture());
  double worst_component = 1.0;
  for (double c : report.component_capacities)
    if (std::abs(c - 1.0) > std::abs(worst_component - 1.0)) worst_component = c;
  add_near(r, "every component capacity is one bit", 1.0, worst_component, 1e-9);
  add_le(r, "mixture capacity at the universal-flip value",
         report.mixture_capacity, kUnotCapacity + 1e-3);
  add_flag(r, "mixture capacity below one bit", report.mixture_below_unit,
           fmt(report.mixture_capacity));
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport sampled_quantum_protocols(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"sampled_quantum_protocols", seed, {}, 0};
  Timer t;
  const auto protocols = game::sample_two_qubit_protocols(seed, opts.protocol_samples);
  int kept = 0, over = 0;
  double max_prize = 0.0;
  for (const auto& spec : protocols) {
    const auto d = game::eval_quantum_protocol(spec);
    if (game::worst_bomb(d).value >= 1e-9) continue;
    ++kept;
    const double prize = game::worst_prize(d).value;
    max_prize = std::max(max_prize, prize);
    if (prize > 1.0 / 3.0 + 1e-6) ++over;
  }
  add(r, "bomb-avoiding protocols kept by the filter", "> 0",
      std::to_string(kept) + " of " + std::to_string(opts.protocol_samples), 0, kept > 0);
  add(r, "kept protocols above the 1/3 prize ceiling", "0", std::to_string(over), 0, over == 0);
  add_le(r, "largest worst-case prize among kept protocols", max_prize, 1.0 / 3.0 + 1e-6);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport capacity_minimality_twirl(std::uint64_t seed, const ScaleOptions& opts) {
  SuiteReport r{"capacity_minimality_twirl", seed, {}, 0};
  Timer t;
  SplitMix64 rng(seed);
  double min_capacity = 2.0;
  std::vector<qchannel::NotMixture> mixtures;
  for (int trial = 0; trial < opts.not_mixtures; ++trial) {
    mixtures.push_back(qchannel::random_not_mixture(rng, 1, 4));
    min_capacity = std::min(
        min_capacity, qchannel::ce_numerical(qchannel::not_mixture(mixtures.back()), opts.ce));
  }
  add(r,
      "flip mixtures never undercut the universal-flip capacity (min over " +
          std::to_string(opts.not_mixtures) + ")",
      ">= " + fmt(kUnotCapacity - 1e-3), fmt(min_capacity), 1e-3,
      min_capacity >= kUnotCapacity - 1e-3);

  double max_dist = 0.0;
  const auto measure = [&](const qchannel::QuantumChannel& ch) {
    const auto twirled = qchannel::twirl_monte_carlo(ch, opts.twirl_samples, rng.next());
    max_dist =
        std::max(max_dist, numkit::distance_frobenius(twirled.choi(), qchannel::unot().choi()));
  };
  measure(qchannel::unot());
  measure(qchannel::cq_not(qchannel::basis_z()));
  for (int i = 0; i < opts.twirl_mixtures && i < static_cast<int>(mixtures.size()); ++i)
    measure(qchannel::not_mixture(mixtures[i]));
  add_le(r,
         "twirled flip channels land on the universal flip (max choi distance, " +
             std::to_string(opts.twirl_samples) + " samples)",
         max_dist, 0.05);
  r.wall_seconds = t.seconds();
  return r;
}

SuiteReport dense_coding_with_channel(const qchannel::QuantumChannel& ch,
                                      const std::string& label, std::uint64_t seed) {
  SuiteReport r{"dense_coding[" + label + "]", seed, {}, 0};
  Timer t;
  const auto d = game::eval_quantum_protocol(game::dense_coding_protocol(ch));
  const double bomb = game::worst_bomb(d).value;
  const double prize = game::worst_prize(d).value;
  if (qchannel::is_not_channel(ch)) {
    add_le(r, "worst-case bomb probability (basis-flip mixture)", bomb, 1e-12);
    if (numkit::distance_frobenius(ch.choi(), qchannel::unot().choi()) < 1e-9)
      add_near(r, "worst-case prize probability (universal flip)", 1.0 / 3.0, prize, 1e-12);
    else
      add(r, "worst-case prize probability", "reported", fmt(prize), 0, true);
  } else {
    add(r, "worst-case bomb probability (no flip structure, reported only)", "reported",
        fmt(bomb), 0, true);
    add(r, "worst-case prize probability", "reported", fmt(prize), 0, true);
  }
  r.wall_seconds = t.seconds();
  return r;
}

std::vector<SuiteReport> run_acceptance(std::uint64_t seed, const ScaleOptions& opts) {
  return {
      capacity_unot(seed, opts),
      dense_coding_worst_case(seed, opts),
      exhaustive_small_alphabets(seed, opts),
      noisy_bit_bound_chain(seed, opts),
      classical_not_capacity(seed, opts),
      trit_simulation(seed, opts),
      strategy_matrix_uniqueness(seed, opts),
      degradation_structure(seed, opts),
      average_scenario(seed, opts),
      channel_simulations(seed, opts),
      ruskai_mixture(seed, opts),
      sampled_quantum_protocols(seed, opts),
      capacity_minimality_twirl(seed, opts),
  };
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm1",      "thm2",      "thm5",    "protocol1", "protocol2",
      "protocol3", "capacity",  "degradation", "average", "ruskai"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const ScaleOptions& opts) {
  const auto merge = [&](std::vector<SuiteReport> parts) {
    SuiteReport out{name, seed, {}, 0};
    for (auto& p : parts) {
      for (auto& c : p.checks) out.checks.push_back(std::move(c));
      out.wall_seconds += p.wall_seconds;
    }
    return out;
  };
  if (name == "thm1") return merge({noisy_bit_bound_chain(seed, opts)});
  if (name == "thm2") return merge({exhaustive_small_alphabets(seed, opts)});
  if (name == "thm5")
    return merge({trit_simulation(seed, opts), strategy_matrix_uniqueness(seed, opts)});
  if (name == "protocol1")
    return merge({dense_coding_worst_case(seed, opts), sampled_quantum_protocols(seed, opts)});
  if (name == "protocol2") {
    SuiteReport r{name, seed, {}, 0};
    Timer t;
    protocol2_checks(r);
    r.wall_seconds = t.seconds();
    return r;
  }
  if (name == "protocol3") {
    SuiteReport r{name, seed, {}, 0};
    Timer t;
    protocol3_checks(r, seed, opts);
    r.wall_seconds = t.seconds();
    return r;
  }
  if (name == "capacity")
    return merge({capacity_unot(seed, opts), classical_not_capacity(seed, opts),
                  capacity_minimality_twirl(seed, opts)});
  if (name == "degradation") return merge({degradation_structure(seed, opts)});
  if (name == "average") return merge({average_scenario(seed, opts)});
  if (name == "ruskai") return merge({ruskai_mixture(seed, opts)});
  throw std::invalid_argument("run_suite: unknown suite \"" + name + "\"");
}

}  // namespace bombprize::suites
