#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "bombprize/qchannel/capacity.hpp"

namespace bombprize::suites {

struct CheckRecord {
  std::string name;
  std::string expected;
  std::string actual;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0.0;

  bool passed() const;
  /// Timing is excluded by default so that a fixed seed reproduces the JSON
  /// byte for byte.
  nlohmann::json to_json(bool include_timing = false) const;
};

/// Knobs for the expensive suites; the defaults are the sizes the acceptance
/// run uses, CI can shrink them.
struct ScaleOptions {
  int twirl_samples = 10000;
  int restarts = 64;
  int bit_channels = 200;
  int protocol_samples = 100;
  int not_mixtures = 50;
  int twirl_mixtures = 5;
  int stochastic_strategies = 10000;
  int cq_mixtures = 20;
  bool thm2_include_d3 = true;
  qchannel::CeSearchOptions ce;
};

// One function per acceptance criterion, in the order the acceptance binary
// prints them.
SuiteReport capacity_unot(std::uint64_t seed, const ScaleOptions& opts);            // 1
SuiteReport dense_coding_worst_case(std::uint64_t seed, const ScaleOptions& opts);  // 2
SuiteReport exhaustive_small_alphabets(std::uint64_t seed, const ScaleOptions& opts);  // 3
SuiteReport noisy_bit_bound_chain(std::uint64_t seed, const ScaleOptions& opts);    // 4
SuiteReport classical_not_capacity(std::uint64_t seed, const ScaleOptions& opts);   // 5
SuiteReport trit_simulation(std::uint64_t seed, const ScaleOptions& opts);          // 6
SuiteReport strategy_matrix_uniqueness(std::uint64_t seed, const ScaleOptions& opts);  // 7
SuiteReport degradation_structure(std::uint64_t seed, const ScaleOptions& opts);    // 8
SuiteReport average_scenario(std::uint64_t seed, const ScaleOptions& opts);         // 9
SuiteReport channel_simulations(std::uint64_t seed, const ScaleOptions& opts);      // 10
SuiteReport ruskai_mixture(std::uint64_t seed, const ScaleOptions& opts);           // 11
SuiteReport sampled_quantum_protocols(std::uint64_t seed, const ScaleOptions& opts);  // 12
SuiteReport capacity_minimality_twirl(std::uint64_t seed, const ScaleOptions& opts);  // 13

/// All thirteen, in order.
std::vector<SuiteReport> run_acceptance(std::uint64_t seed, const ScaleOptions& opts);

/// Dense-coding evaluation of one channel. Basis-flip mixtures must avoid the
/// bomb (and the universal flip must land on prize probability 1/3); other
/// channels get their worst-case numbers reported without a verdict.
SuiteReport dense_coding_with_channel(const qchannel::QuantumChannel& ch,
                                      const std::string& label, std::uint64_t seed);

/// CLI suite names (thm1, thm2, thm5, protocol1, protocol2, protocol3,
/// capacity, degradation, average, ruskai) mapped onto the criteria above;
/// throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const ScaleOptions& opts);
const std::vector<std::string>& suite_names();

}  // namespace bombprize::suites
