#include "bombprize/numkit/ratlinalg.hpp"

#include <stdexcept>

namespace bombprize::numkit {

LinearSystemSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_exact: ragged matrix");
  if (b.size() != m) throw std::invalid_argument("solve_exact: rhs size mismatch");

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!b[i].is_zero()) return {};  // 0 = nonzero

  LinearSystemSolution sol;
  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) sol.particular[pivot_col[k]] = b[k];

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free_col];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

namespace {

// Eliminates variable `var`; the returned constraints have that column removed.
std::vector<AffineConstraint> eliminate_var(const std::vector<AffineConstraint>& cs,
                                            std::size_t var) {
  std::vector<AffineConstraint> out;
  std::vector<const AffineConstraint*> pos, neg;
  const auto drop_col = [var](const AffineConstraint& c) {
    AffineConstraint r;
    r.bound = c.bound;
    r.coeff.reserve(c.coeff.size() - 1);
    for (std::size_t j = 0; j < c.coeff.size(); ++j)
      if (j != var) r.coeff.push_back(c.coeff[j]);
    return r;
  };
  for (const auto& c : cs) {
    const Rational a = c.coeff[var];
    if (a.is_zero())
      out.push_back(drop_col(c));
    else if (a > Rational(0))
      pos.push_back(&c);
    else
      neg.push_back(&c);
  }
  for (const auto* p : pos) {
    for (const auto* n : neg) {
      const Rational mp = -n->coeff[var];  // > 0
      const Rational mn = p->coeff[var];   // > 0
      AffineConstraint r;
      r.coeff.reserve(p->coeff.size() - 1);
      for (std::size_t j = 0; j < p->coeff.size(); ++j) {
        if (j == var) continue;
        r.coeff.push_back(mp * p->coeff[j] + mn * n->coeff[j]);
      }
      r.bound = mp * p->bound + mn * n->bound;
      out.push_back(std::move(r));
    }
  }
  if (out.size() > 200000) throw std::runtime_error("fourier_motzkin: blow-up");
  return out;
}

}  // namespace

bool fourier_motzkin_feasible(std::vector<AffineConstraint> cs, std::size_t num_vars) {
  for (const auto& c : cs)
    if (c.coeff.size() != num_vars) throw std::invalid_argument("fourier_motzkin: coeff size");
  for (std::size_t v = num_vars; v-- > 0;) cs = eliminate_var(cs, v);
  for (const auto& c : cs)
    if (c.bound < Rational(0)) return false;
  return true;
}

RationalInterval fourier_motzkin_range(const std::vector<AffineConstraint>& cs,
                                       std::size_t num_vars,
                                       const std::vector<Rational>& objective, Rational offset) {
  if (objective.size() != num_vars)
    throw std::invalid_argument("fourier_motzkin_range: objective size");
  // Variable layout: z at index 0, then the original t variables.
  std::vector<AffineConstraint> sys;
  sys.reserve(cs.size() + 2);
  for (const auto& c : cs) {
    AffineConstraint r;
    r.coeff.assign(num_vars + 1, Rational(0));
    for (std::size_t j = 0; j < num_vars; ++j) r.coeff[j + 1] = c.coeff[j];
    r.bound = c.bound;
    sys.push_back(std::move(r));
  }
  AffineConstraint up, dn;  // z - obj.t <= offset,  obj.t - z <= -offset
  up.coeff.assign(num_vars + 1, Rational(0));
  dn.coeff.assign(num_vars + 1, Rational(0));
  up.coeff[0] = Rational(1);
  dn.coeff[0] = Rational(-1);
  for (std::size_t j = 0; j < num_vars; ++j) {
    up.coeff[j + 1] = -objective[j];
    dn.coeff[j + 1] = objective[j];
  }
  up.bound = offset;
  dn.bound = -offset;
  sys.push_back(std::move(up));
  sys.push_back(std::move(dn));

  for (std::size_t v = num_vars; v >= 1; --v) sys = eliminate_var(sys, v);

  RationalInterval iv;
  iv.feasible = true;
  for (const auto& c : sys) {
    const Rational a = c.coeff[0];
    if (a.is_zero()) {
      if (c.bound < Rational(0)) return {};
    } else if (a > Rational(0)) {
      const Rational h = c.bound / a;
      if (!iv.hi || h < *iv.hi) iv.hi = h;
    } else {
      const Rational l = c.bound / a;
      if (!iv.lo || l > *iv.lo) iv.lo = l;
    }
  }
  if (iv.lo && iv.hi && *iv.hi < *iv.lo) return {};
  return iv;
}

}  // namespace bombprize::numkit
