#include "bombprize/simkit/uniqueness.hpp"

#include <stdexcept>

#include "bombprize/numkit/ratlinalg.hpp"

namespace bombprize::simkit {

using numkit::AffineConstraint;
using numkit::Rational;

namespace {

struct AffineSubtype {
  StrategyMatrix base;            // M(0, 0)
  std::array<Rational, 16> dp{};  // dM/dp
  std::array<Rational, 16> dr{};  // dM/dr
  bool simplex_params = false;    // type (1,3): p + r <= 1
};

AffineSubtype affine_decomposition(const SubtypeId& s) {
  AffineSubtype a;
  a.base = subtype_matrix(s, Rational(0), Rational(0));
  const StrategyMatrix mp = subtype_matrix(s, Rational(1), Rational(0));
  const StrategyMatrix mr = subtype_matrix(s, Rational(0), Rational(1));
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) {
      const std::size_t k = (y - 1) * 4 + (b - 1);
      a.dp[k] = mp.at(y, b) - a.base.at(y, b);
      a.dr[k] = mr.at(y, b) - a.base.at(y, b);
    }
  a.simplex_params = s.type() == std::pair<int, int>(1, 3);
  return a;
}

}  // namespace

MixtureFeasibility solve_mixture(const std::vector<SubtypeId>& subtypes,
                                 const StrategyMatrix& target) {
  const std::size_t k = subtypes.size();
  if (k == 0) throw std::invalid_argument("solve_mixture: no subtypes");
  std::vector<AffineSubtype> parts;
  for (const auto& s : subtypes) parts.push_back(affine_decomposition(s));

  // Variables per component: q_i, u_i = q_i p_i, v_i = q_i r_i.
  const std::size_t nvars = 3 * k;
  std::vector<std::vector<Rational>> mat;
  std::vector<Rational> rhs;
  for (int y = 1; y <= 4; ++y)
    for (int b = 1; b <= 4; ++b) {
      const std::size_t e = (y - 1) * 4 + (b - 1);
      std::vector<Rational> row(nvars, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        row[3 * i + 0] = parts[i].base.at(y, b);
        row[3 * i + 1] = parts[i].dp[e];
        row[3 * i + 2] = parts[i].dr[e];
      }
      mat.push_back(std::move(row));
      rhs.push_back(target.at(y, b));
    }
  {  // normalisation
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t i = 0; i < k; ++i) row[3 * i] = Rational(1);
    mat.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }

  MixtureFeasibility out;
  const auto sol = numkit::solve_exact(mat, rhs);
  if (!sol.consistent) return out;

  // Inequalities in terms of the free parameters t: x = x0 + N t.
  const std::size_t dim = sol.nullspace.size();
  std::vector<AffineConstraint> cs;
  const auto add_le = [&](const std::vector<Rational>& coeff_x, const Rational& bound) {
    // coeff_x . x <= bound
    AffineConstraint c;
    c.coeff.assign(dim, Rational(0));
    Rational base(0);
    for (std::size_t j = 0; j < nvars; ++j) {
      if (coeff_x[j].is_zero()) continue;
      base += coeff_x[j] * sol.particular[j];
      for (std::size_t t = 0; t < dim; ++t) c.coeff[t] += coeff_x[j] * sol.nullspace[t][j];
    }
    c.bound = bound - base;
    cs.push_back(std::move(c));
  };
  const auto unit = [&](std::size_t j, const Rational& sign) {
    std::vector<Rational> v(nvars, Rational(0));
    v[j] = sign;
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    add_le(unit(3 * i, Rational(-1)), Rational(0));      // q_i >= 0
    add_le(unit(3 * i + 1, Rational(-1)), Rational(0));  // u_i >= 0
    add_le(unit(3 * i + 2, Rational(-1)), Rational(0));  // v_i >= 0
    if (parts[i].simplex_params) {
      std::vector<Rational> v(nvars, Rational(0));
      v[3 * i + 1] = Rational(1);
      v[3 * i + 2] = Rational(1);
      v[3 * i] = Rational(-1);
      add_le(v, Rational(0));  // u_i + v_i <= q_i
    } else {
      std::vector<Rational> v(nvars, Rational(0));
      v[3 * i + 1] = Rational(1);
      v[3 * i] = Rational(-1);
      add_le(v, Rational(0));  // u_i <= q_i
      std::vector<Rational> w(nvars, Rational(0));
      w[3 * i + 2] = Rational(1);
      w[3 * i] = Rational(-1);
      add_le(w, Rational(0));  // v_i <= q_i
    }
  }

  if (dim == 0) {
    for (const auto& c : cs)
      if (Rational(0) > c.bound) return out;
  } else if (!numkit::fourier_motzkin_feasible(cs, dim)) {
    return out;
  }

  out.feasible = true;
  out.unique_solution = (dim == 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> obj(dim, Rational(0));
    Rational offset = sol.particular[3 * i];
    for (std::size_t t = 0; t < dim; ++t) obj[t] = sol.nullspace[t][3 * i];
    if (dim == 0) {
      out.q_range.emplace_back(offset, offset);
    } else {
      const auto iv = numkit::fourier_motzkin_range(cs, dim, obj, offset);
      if (!iv.feasible || !iv.lo || !iv.hi)
        throw std::logic_error("solve_mixture: unbounded weight range");
      out.q_range.emplace_back(*iv.lo, *iv.hi);
    }
  }
  if (out.unique_solution) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational q = sol.particular[3 * i];
      out.q.push_back(q);
      if (q.is_zero()) {
        out.p.push_back(Rational(0));
        out.r.push_back(Rational(0));
      } else {
        out.p.push_back(sol.particular[3 * i + 1] / q);
        out.r.push_back(sol.particular[3 * i + 2] / q);
      }
    }
  }
  return out;
}

PairsReport theorem5_pairs() {
  const auto& subtypes = SubtypeId::all();
  const StrategyMatrix target = classical_not();
  PairsReport report;
  for (std::size_t i = 0; i < subtypes.size(); ++i)
    for (std::size_t j = i; j < subtypes.size(); ++j) {
      ++report.total;
      const auto r = solve_mixture({subtypes[i], subtypes[j]}, target);
      if (r.feasible) {
        ++report.feasible;
        report.feasible_pairs.emplace_back(subtypes[i], subtypes[j]);
      }
    }
  return report;
}

TriplesReport theorem5_triples() {
  const auto& subtypes = SubtypeId::all();
  const StrategyMatrix target = classical_not();
  TriplesReport report;
  const Rational third(1, 3);
  for (std::size_t i = 0; i < subtypes.size(); ++i)
    for (std::size_t j = i + 1; j < subtypes.size(); ++j)
      for (std::size_t l = j + 1; l < subtypes.size(); ++l) {
        ++report.total;
        auto r = solve_mixture({subtypes[i], subtypes[j], subtypes[l]}, target);
        if (!r.feasible) continue;
        ++report.feasible;
        for (const auto& [lo, hi] : r.q_range)
          if (lo != third || hi != third) report.all_weights_uniform = false;
        report.feasible_triples.push_back({{subtypes[i], subtypes[j], subtypes[l]}, std::move(r)});
      }
  return report;
}

}  // namespace bombprize::simkit
