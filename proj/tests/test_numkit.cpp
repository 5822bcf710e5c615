#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bombprize/numkit/cmatrix.hpp"
#include "bombprize/numkit/eigen.hpp"
#include "bombprize/numkit/entropy.hpp"
#include "bombprize/numkit/ratlinalg.hpp"
#include "bombprize/numkit/rational.hpp"
#include "bombprize/numkit/rng.hpp"

using namespace bombprize::numkit;

namespace {

CMatrix bell_plus_projector() {
  CMatrix v(4, 1);
  v(0, 0) = 1.0 / std::sqrt(2.0);
  v(3, 0) = 1.0 / std::sqrt(2.0);
  return outer(v, v);
}

}  // namespace

TEST_CASE("tensor basics") {
  CHECK(distance_frobenius(tensor(CMatrix::identity(2), CMatrix::identity(2)),
                           CMatrix::identity(4)) == 0.0);

  const CMatrix p0 = outer(basis_ket(2, 0), basis_ket(2, 0));
  const CMatrix p1 = outer(basis_ket(2, 1), basis_ket(2, 1));
  const CMatrix t = tensor(p0, p1);
  CHECK(t(1, 1) == Complex{1.0, 0.0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(i == 1 && j == 1)) CHECK(t(i, j) == Complex{0.0, 0.0});

  // X(x)X fixes the maximally entangled projector: direct 4x4 multiplication.
  const CMatrix phi = bell_plus_projector();
  const CMatrix xx = tensor(pauli_x(), pauli_x());
  CHECK(distance_frobenius(xx * phi * xx.adjoint(), phi) < 1e-15);
}

TEST_CASE("tensor is associative on exact inputs") {
  const CMatrix a(2, 2, {1, 0.5, 0, 1});
  const CMatrix b = pauli_y();
  const CMatrix c(2, 2, {0.25, 0, 1, -1});
  CHECK(distance_frobenius(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
}

TEST_CASE("partial trace") {
  const CMatrix half_i = 0.5 * CMatrix::identity(2);
  CHECK(distance_frobenius(partial_trace(bell_plus_projector(), 2, 2, Subsystem::A), half_i) <
        1e-15);

  SplitMix64 rng(7);
  const CMatrix rho = random_density(2, rng);
  const CMatrix sigma = random_density(2, rng);
  const CMatrix prod = tensor(rho, sigma);
  CHECK(distance_frobenius(partial_trace(prod, 2, 2, Subsystem::A), rho) < 1e-14);
  CHECK(distance_frobenius(partial_trace(prod, 2, 2, Subsystem::B), sigma) < 1e-14);

  // exact inputs come back exactly, including the Tr(b) scale
  const CMatrix a(2, 2, {0.5, Complex{0, 0.25}, Complex{0, -0.25}, 0.5});
  const CMatrix b(2, 2, {0.75, 0, 0, 0.75});  // trace 3/2
  CMatrix scaled = a;
  scaled *= Complex{1.5, 0.0};
  CHECK(distance_frobenius(partial_trace(tensor(a, b), 2, 2, Subsystem::A), scaled) == 0.0);
  // trace preserved
  CHECK(partial_trace(prod, 2, 2, Subsystem::A).trace().real() ==
        doctest::Approx(prod.trace().real()).epsilon(1e-13));

  CHECK_THROWS_AS(partial_trace(CMatrix::identity(3), 2, 2, Subsystem::A), std::invalid_argument);
}

TEST_CASE("partial transpose") {
  const CMatrix phi = bell_plus_projector();
  const auto lam = hermitian_eigenvalues(partial_transpose(phi, 2, 2, Subsystem::A));
  CHECK(lam[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(lam[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lam[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lam[3] == doctest::Approx(0.5).epsilon(1e-12));

  SplitMix64 rng(11);
  const CMatrix rho = random_density(2, rng);
  const CMatrix sigma = random_density(2, rng);
  CHECK(distance_frobenius(partial_transpose(tensor(rho, sigma), 2, 2, Subsystem::A),
                           tensor(rho.transpose(), sigma)) < 1e-14);

  // involution on a random (not necessarily Hermitian) matrix
  CMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
  CHECK(distance_frobenius(partial_transpose(partial_transpose(g, 2, 2, Subsystem::B), 2, 2,
                                             Subsystem::B),
                           g) == 0.0);
}

TEST_CASE("hermitian eigensolver") {
  const CMatrix d(2, 2, {1.0 / 3.0, 0, 0, 2.0 / 3.0});
  auto lam = hermitian_eigenvalues(d);
  CHECK(lam[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(lam[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  lam = hermitian_eigenvalues(pauli_x());
  CHECK(lam[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(lam[1] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(hermitian_eigenvalues(CMatrix(2, 2, {0, 1, 0, 0})), std::invalid_argument);

  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    CMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        g(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
    const CMatrix h = 0.5 * (g + g.adjoint());
    const auto es = hermitian_eigensystem(h);
    double tr = 0.0;
    for (double x : es.values) tr += x;
    CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-10));
    // spectral reconstruction
    CMatrix rec(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      CMatrix col(4, 1);
      for (std::size_t i = 0; i < 4; ++i) col(i, 0) = es.vectors(i, k);
      rec += Complex{es.values[k], 0.0} * outer(col, col);
    }
    CHECK(distance_frobenius(rec, h) < 1e-9);
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(vn_entropy(0.5 * CMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(vn_entropy(outer(basis_ket(2, 0), basis_ket(2, 0))) == doctest::Approx(0.0).epsilon(1e-12));

  const double h13 = -(1.0 / 3.0) * std::log2(1.0 / 3.0) - (2.0 / 3.0) * std::log2(2.0 / 3.0);
  CHECK(vn_entropy(CMatrix(2, 2, {1.0 / 3.0, 0, 0, 2.0 / 3.0})) ==
        doctest::Approx(h13).epsilon(1e-13));
  CHECK(h13 == doctest::Approx(0.9182958340544896).epsilon(1e-12));

  CHECK_THROWS_AS(vn_entropy(CMatrix::identity(2)), std::invalid_argument);  // trace 2

  // unitary invariance
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix rho = random_density(2, rng);
    const CMatrix u = haar_unitary(2, rng);
    CHECK(std::abs(vn_entropy(u * rho * u.adjoint()) - vn_entropy(rho)) < 1e-9);
  }
}

TEST_CASE("shannon and binary entropy") {
  CHECK(shannon_entropy({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0}) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-13));
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.6}), std::invalid_argument);

  // binary entropy against the 4p(1-p) power bound on a 99-point grid
  const double e = 1.0 / std::log(4.0);
  for (int i = 1; i <= 99; ++i) {
    const double p = i / 100.0;
    CHECK(binary_entropy(p) <= std::pow(4.0 * p * (1.0 - p), e) + 1e-12);
  }
}

TEST_CASE("rational arithmetic") {
  const Rational third(1, 3);
  CHECK((third + third + third) == Rational(1));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
  CHECK((Rational(1, 2) / Rational(1, 6)) == Rational(3));
  CHECK(Rational::parse("-2/5") == Rational(-2, 5));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(5, 15).to_string() == "1/3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("exact linear solve and fourier-motzkin") {
  // x + y = 1, x - y = 0  ->  x = y = 1/2
  auto sol = solve_exact({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}},
                         {Rational(1), Rational(0)});
  REQUIRE(sol.consistent);
  CHECK(sol.nullspace.empty());
  CHECK(sol.particular[0] == Rational(1, 2));
  CHECK(sol.particular[1] == Rational(1, 2));

  // inconsistent
  sol = solve_exact({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                    {Rational(1), Rational(3)});
  CHECK_FALSE(sol.consistent);

  // underdetermined: x + y = 1 -> one null direction
  sol = solve_exact({{Rational(1), Rational(1)}}, {Rational(1)});
  REQUIRE(sol.consistent);
  CHECK(sol.nullspace.size() == 1);

  // 0 <= t <= 1 and t >= 2 infeasible
  std::vector<AffineConstraint> cs;
  cs.push_back({{Rational(1)}, Rational(1)});
  cs.push_back({{Rational(-1)}, Rational(0)});
  CHECK(fourier_motzkin_feasible(cs, 1));
  cs.push_back({{Rational(-1)}, Rational(-2)});
  CHECK_FALSE(fourier_motzkin_feasible(cs, 1));

  // range of z = 2t + 1 over 0 <= t <= 1 is [1, 3]
  cs.pop_back();
  const auto iv = fourier_motzkin_range(cs, 1, {Rational(2)}, Rational(1));
  REQUIRE(iv.feasible);
  REQUIRE(iv.lo.has_value());
  REQUIRE(iv.hi.has_value());
  CHECK(*iv.lo == Rational(1));
  CHECK(*iv.hi == Rational(3));
}

TEST_CASE("rng determinism and haar sampling") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
  SplitMix64 child = a.split();
  CHECK(child.next() != a.next());

  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = haar_unitary(2, rng);
    CHECK(distance_frobenius(u * u.adjoint(), CMatrix::identity(2)) < 1e-12);
  }
  const CMatrix k = random_ket(4, rng);
  CHECK(std::abs((k.adjoint() * k)(0, 0).real() - 1.0) < 1e-12);
  const CMatrix rho = random_density(2, rng);
  CHECK(rho.is_hermitian(1e-12));
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  CHECK(min_eigenvalue(rho) > -1e-12);
}
