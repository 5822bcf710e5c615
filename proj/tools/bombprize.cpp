// Command-line front end: capacities, verification suites, bound curves,
// protocol transcripts and strategy evaluation.
//
// Exit codes: 0 success, 2 bad arguments or malformed input, 3 failed suite.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "bombprize/classical/blahut_arimoto.hpp"
#include "bombprize/classical/theorem2.hpp"
#include "bombprize/game/game.hpp"
#include "bombprize/game/json.hpp"
#include "bombprize/numkit/rng.hpp"
#include "bombprize/qchannel/capacity.hpp"
#include "bombprize/qchannel/json.hpp"
#include "bombprize/simkit/json.hpp"
#include "bombprize/simkit/protocols.hpp"
#include "bombprize/suites/suites.hpp"

namespace {

using nlohmann::json;

std::string read_source(const std::string& inline_json, const std::string& path) {
  if (!inline_json.empty()) return inline_json;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BOMBPRIZE_SEED")) return std::strtoull(env, nullptr, 10);
  return 12345;
}

int cmd_capacity(const std::string& source) {
  const json j = json::parse(source);
  json out;
  std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string()
                         ? j["kind"].get<std::string>()
                         : "";
  // a bare {"p":[[..],[..]]} is a classical transition matrix (bit channels
  // are the 2x2 case)
  if (kind.empty() && j.is_object() && j.contains("p") && j["p"].is_array() &&
      !j["p"].empty() && j["p"][0].is_array())
    kind = "classical";
  if (kind == "classical") {
    const auto& pj = j.at("p");
    std::vector<std::vector<double>> w;
    for (const auto& row : pj) w.push_back(row.get<std::vector<double>>());
    out["kind"] = "classical";
    out["capacity"] = bombprize::classical::blahut_arimoto(w);
  } else {
    const auto channel = bombprize::qchannel::channel_from_json(j);
    out["kind"] = kind;
    if (kind == "unot") {
      out["closed_form"] = bombprize::qchannel::ce_pauli({0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
    } else if (kind == "pauli") {
      out["closed_form"] = bombprize::qchannel::ce_pauli(
          {j["p"][0].get<double>(), j["p"][1].get<double>(), j["p"][2].get<double>(),
           j["p"][3].get<double>()});
    }
    out["numerical"] = bombprize::qchannel::ce_numerical(channel);
    if (out.contains("closed_form"))
      out["gap"] = std::abs(out["closed_form"].get<double>() - out["numerical"].get<double>());
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const bombprize::suites::ScaleOptions& opts, bool quiet, bool timings,
               bool stream, const std::string& channel) {
  if (suite == "protocol1" && !channel.empty()) {
    const auto ch = channel == "unot"
                        ? bombprize::qchannel::unot()
                        : bombprize::qchannel::channel_from_json(json::parse(channel));
    const auto report = bombprize::suites::dense_coding_with_channel(ch, channel, seed);
    if (!quiet) std::cout << report.to_json(timings).dump(2) << "\n";
    return report.passed() ? 0 : 3;
  }
  if (stream && suite == "thm2") {
    for (int d : {2, opts.thm2_include_d3 ? 3 : 0}) {
      if (d == 0) continue;
      bombprize::classical::enumerate_theorem2(
          d, 0, seed, [&](const std::vector<int>& decoding, std::uint64_t avoiding,
                          std::uint64_t certain) {
            json line{{"d", d},
                      {"decoding", decoding},
                      {"bomb_avoiding", avoiding},
                      {"prize_certain", certain}};
            std::cout << line.dump() << "\n";
          });
    }
  }
  const auto report = bombprize::suites::run_suite(suite, seed, opts);
  if (!quiet) std::cout << report.to_json(timings).dump(2) << "\n";
  return report.passed() ? 0 : 3;
}

int cmd_bound_curve(int steps) {
  if (steps < 2) throw std::invalid_argument("bound-curve: steps must be >= 2");
  std::printf("capacity,bound\n");
  for (int i = 0; i < steps; ++i) {
    const double c = static_cast<double>(i) / (steps - 1);
    std::printf("%.10g,%.10g\n", c, bombprize::game::theorem1_bound(c));
  }
  return 0;
}

int cmd_simulate(const std::string& protocol, std::uint64_t seed, int count,
                 const std::string& state_json, const std::string& mixture_path) {
  bombprize::numkit::SplitMix64 rng(seed);
  bombprize::numkit::CMatrix rho =
      bombprize::numkit::outer(bombprize::numkit::basis_ket(2, 0),
                               bombprize::numkit::basis_ket(2, 0));
  if (!state_json.empty())
    rho = bombprize::qchannel::cmatrix_from_json(json::parse(state_json), 2, 2);

  if (protocol == "unot-bit") {
    for (int t = 0; t < count; ++t) {
      const auto tr = bombprize::simkit::sample_unot_bit(rho, rng);
      json line{{"i", tr.basis},
                {"m", tr.outcome},
                {"prepared", bombprize::qchannel::cmatrix_to_json(tr.prepared)}};
      std::cout << line.dump() << "\n";
    }
    return 0;
  }
  if (protocol == "eb") {
    bombprize::simkit::CQMixture mixture;
    if (mixture_path.empty()) {
      for (int i = 1; i <= 3; ++i) {
        const auto basis = bombprize::qchannel::pauli_eigenbasis(i);
        mixture.components.push_back(
            {1.0 / 3.0,
             {basis, bombprize::numkit::outer(basis.ket1, basis.ket1),
              bombprize::numkit::outer(basis.ket0, basis.ket0)}});
      }
    } else {
      mixture = bombprize::simkit::cq_mixture_from_json(
          json::parse(read_source("", mixture_path)));
    }
    for (int t = 0; t < count; ++t) {
      const auto tr = bombprize::simkit::sample_eb(mixture, rho, rng);
      json line{{"i", tr.component},
                {"m", tr.outcome},
                {"prepared", bombprize::qchannel::cmatrix_to_json(tr.prepared)}};
      std::cout << line.dump() << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("simulate: protocol must be unot-bit or eb");
}

int cmd_game(const std::string& dist_path, const std::string& prior_path) {
  const auto dist =
      bombprize::game::distribution_from_json(json::parse(read_source("", dist_path)));
  const auto wp = bombprize::game::worst_prize(dist);
  const auto wb = bombprize::game::worst_bomb(dist);
  const auto configs_json = [](const std::vector<bombprize::game::GameConfig>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back({{"b", c.bomb}, {"x", c.prize}});
    return arr;
  };
  json out{{"worst_prize", wp.value},
           {"worst_prize_argmin", configs_json(wp.argset)},
           {"worst_bomb", wb.value},
           {"worst_bomb_argmax", configs_json(wb.argset)}};
  if (!prior_path.empty()) {
    const auto prior =
        bombprize::game::prior_from_json(json::parse(read_source("", prior_path)));
    out["avg_prize"] = bombprize::game::avg_prize(dist, prior);
    out["avg_bomb"] = bombprize::game::avg_bomb(dist, prior);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bomb-and-prize game toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed may follow the subcommand

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "seed for all randomised runs (env BOMBPRIZE_SEED)");

  auto* capacity = app.add_subcommand("capacity", "channel capacities, closed form and numerical");
  std::string cap_json, cap_file = "-";
  capacity->add_option("--json", cap_json, "inline channel JSON");
  capacity->add_option("--file", cap_file, "channel JSON file, - for stdin");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "one of: thm1 thm2 thm5 protocol1 protocol2 protocol3 capacity degradation average ruskai")
      ->required();
  bombprize::suites::ScaleOptions opts;
  bool quiet = false, timings = false, stream = false, smoke = false;
  verify->add_option("--samples", opts.twirl_samples, "monte carlo samples for the twirl");
  verify->add_option("--restarts", opts.restarts, "restarts for the adversarial search");
  verify->add_option("--channels", opts.bit_channels, "random bit channels for the bound chain");
  verify->add_option("--protocols", opts.protocol_samples, "sampled two-qubit protocols");
  verify->add_option("--mixtures", opts.not_mixtures, "sampled basis-flip mixtures");
  verify->add_option("--stochastic", opts.stochastic_strategies,
                     "sampled stochastic strategies per alphabet");
  std::string grid;
  verify->add_option("--grid", grid, "capacity search grid, RADIALxPOLARxAZIMUTHAL");
  verify->add_flag("--skip-d3", [&opts](std::int64_t) { opts.thm2_include_d3 = false; },
                   "skip the d=3 enumeration");
  verify->add_flag("--quiet", quiet, "no report, exit code only");
  verify->add_flag("--timings", timings, "include wall time in the report");
  verify->add_flag("--stream", stream, "stream per-decoding JSON lines (thm2)");
  verify->add_flag("--smoke", smoke, "reduced sizes for quick runs");
  std::string channel;
  verify->add_option("--channel", channel,
                     "protocol1 only: channel name \"unot\" or inline channel JSON");

  auto* curve = app.add_subcommand("bound-curve", "CSV of the worst-case bomb bound");
  int steps = 101;
  curve->add_option("--steps", steps, "number of capacity samples");

  auto* simulate = app.add_subcommand("simulate", "protocol transcript demos");
  std::string protocol = "unot-bit", state_json, mixture_path;
  int count = 5;
  simulate->add_option("--protocol", protocol, "unot-bit or eb");
  simulate->add_option("--count", count, "number of transcripts");
  simulate->add_option("--state", state_json, "input qubit density matrix, [[re,im]x4]");
  simulate->add_option("--mixture", mixture_path, "CQ mixture JSON file (eb)");

  auto* game_cmd = app.add_subcommand("game", "evaluate a strategy distribution");
  std::string dist_path, prior_path;
  game_cmd->add_option("--dist", dist_path, "distribution JSON file")->required();
  game_cmd->add_option("--prior", prior_path, "prior JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*capacity) return cmd_capacity(read_source(cap_json, cap_file));
    if (*verify) {
      if (smoke) {
        opts.twirl_samples = 1000;
        opts.restarts = 8;
        opts.bit_channels = 20;
        opts.protocol_samples = 10;
        opts.not_mixtures = 5;
        opts.stochastic_strategies = 200;
        opts.thm2_include_d3 = false;
      }
      if (!grid.empty()) {
        if (std::sscanf(grid.c_str(), "%dx%dx%d", &opts.ce.radial, &opts.ce.polar,
                        &opts.ce.azimuthal) != 3)
          throw std::invalid_argument("--grid expects RADIALxPOLARxAZIMUTHAL");
      }
      return cmd_verify(suite, seed, opts, quiet, timings, stream, channel);
    }
    if (*curve) return cmd_bound_curve(steps);
    if (*simulate) return cmd_simulate(protocol, seed, count, state_json, mixture_path);
    if (*game_cmd) return cmd_game(dist_path, prior_path);
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
