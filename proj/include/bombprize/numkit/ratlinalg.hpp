#pragma once

#include <optional>
#include <vector>

#include "bombprize/numkit/rational.hpp"

namespace bombprize::numkit {

/// Exact solution set of A x = b: either inconsistent, or a particular
/// solution plus a nullspace basis.
struct LinearSystemSolution {
  bool consistent = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};

LinearSystemSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

/// coeff . t <= bound
struct AffineConstraint {
  std::vector<Rational> coeff;
  Rational bound;
};

/// Fourier-Motzkin elimination over exact rationals. Fine for the handful of
/// variables that appear in the feasibility systems here.
bool fourier_motzkin_feasible(std::vector<AffineConstraint> cs, std::size_t num_vars);

struct RationalInterval {
  bool feasible = false;
  std::optional<Rational> lo, hi;  // unset = unbounded on that side
};

/// Range of objective . t + offset over the polytope.
RationalInterval fourier_motzkin_range(const std::vector<AffineConstraint>& cs,
                                       std::size_t num_vars,
                                       const std::vector<Rational>& objective, Rational offset);

}  // namespace bombprize::numkit
