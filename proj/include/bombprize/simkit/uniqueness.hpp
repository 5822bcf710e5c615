#pragma once

#include <optional>
#include <vector>

#include "bombprize/simkit/strategy_matrix.hpp"

namespace bombprize::simkit {

/// Exact feasibility of  sum_i q_i M_i(p_i, r_i) = target  over mixtures of
/// the given subtypes, with q a probability vector and the parameters inside
/// their subtype ranges. Linearised through u_i = q_i p_i, v_i = q_i r_i and
/// solved over rationals; leftover free directions go through
/// Fourier-Motzkin, so the verdict is exact either way.
struct MixtureFeasibility {
  bool feasible = false;
  bool unique_solution = false;
  // populated when the solution point is unique
  std::vector<numkit::Rational> q, p, r;
  // exact range of each q_i over the feasible set (when feasible)
  std::vector<std::pair<numkit::Rational, numkit::Rational>> q_range;
};

MixtureFeasibility solve_mixture(const std::vector<SubtypeId>& subtypes,
                                 const StrategyMatrix& target);

struct PairsReport {
  int total = 0;
  int feasible = 0;  // expected 0
  std::vector<std::pair<SubtypeId, SubtypeId>> feasible_pairs;
};

/// Every unordered pair of subtypes (same-subtype pairs included) against the
/// 4-box basis-flip target.
PairsReport theorem5_pairs();

struct TripleResult {
  std::vector<SubtypeId> subtypes;
  MixtureFeasibility result;
};

struct TriplesReport {
  int total = 0;
  int feasible = 0;
  bool all_weights_uniform = true;  // every feasible triple forces q = (1/3,1/3,1/3)
  std::vector<TripleResult> feasible_triples;
};

/// Every unordered triple of distinct subtypes. Triples with a repeated
/// subtype merge into pairs (the linearised systems coincide), which
/// theorem5_pairs already rules out.
TriplesReport theorem5_triples();

}  // namespace bombprize::simkit
