#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrhart/corpus.hpp"
#include "ehrhart/ehrhart.hpp"

using namespace ehrhart;

TEST_CASE("polynomial interpolation and evaluation") {
  const Polynomial p = Polynomial::interpolate(
      {Rational(0), Rational(1), Rational(2)}, {Rational(1), Rational(4), Rational(9)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p(5) == Rational(36));
  CHECK(p(Rational(-1, 2)) == Rational(1, 4));

  const Polynomial c = Polynomial::interpolate({Rational(3)}, {Rational(7)});
  CHECK(c.degree() == 0);
  CHECK(c(100) == Rational(7));
}

TEST_CASE("Ehrhart polynomial of the pick triangle is (t+1)^2") {
  const Polynomial l = ehrhart_polynomial(pick_triangle());
  CHECK(l.str() == "1,2,1");
}

TEST_CASE("Reeve family polynomials") {
  for (long h = 1; h <= 13; ++h) {
    const Polynomial l = ehrhart_polynomial(reeve_tetrahedron(h));
    CHECK(l.coeff(3) == Rational(h, 6));
    CHECK(l.coeff(2) == Rational(1));
    CHECK(l.coeff(1) == Rational(2) - Rational(h, 6));
    CHECK(l.coeff(0) == Rational(1));
  }
  CHECK(ehrhart_polynomial(reeve_tetrahedron(13)).coeff(1) < Rational(0));
}

TEST_CASE("unit cubes give (t+1)^d") {
  for (int d = 1; d <= 4; ++d) {
    const Polynomial l = ehrhart_polynomial(unit_cube(d));
    CHECK(l.degree() == d);
    for (long k = 0; k <= d; ++k) CHECK(l.coeff(k) == Rational(binomial(d, k)));
  }
}

TEST_CASE("standard simplices give C(t+d, d)") {
  for (int d = 1; d <= 4; ++d) {
    const Polynomial l = ehrhart_polynomial(standard_simplex(d));
    CHECK(l.degree() == d);
    for (long t = 0; t <= 2 * d + 2; ++t)
      CHECK(l(t) == Rational(binomial(t + d, d)));
  }
}

TEST_CASE("lower-dimensional polytopes keep degree = dim") {
  const Polytope seg = build_polytope({make_vector({0, 0}), make_vector({2, 2})});
  const Polynomial l = ehrhart_polynomial(seg);
  CHECK(l.str() == "1,2");  // lattice length 2, not euclidean
  const Polytope pt = build_polytope({make_vector({3, 1})});
  CHECK(ehrhart_polynomial(pt).str() == "1");
}

TEST_CASE("ehrhart_polynomial rejects rational polytopes") {
  CHECK_THROWS_AS(ehrhart_polynomial(half_segment()), std::invalid_argument);
}

TEST_CASE("recurrence check") {
  CHECK(recurrence_check({1, 4, 9, 16, 25}, 2));
  CHECK(!recurrence_check({1, 2, 4, 8}, 1));
  CHECK(!recurrence_check({1, 2, 4, 8}, 2));
  CHECK(recurrence_check({5, 5, 5, 5}, 0));
  CHECK_THROWS_AS(recurrence_check({1, 2}, 2), std::invalid_argument);
}

TEST_CASE("signed count sequences satisfy the recurrence") {
  for (const auto& [name, poly] : integral_corpus()) {
    CAPTURE(name);
    const int d = static_cast<int>(poly.dim);
    std::vector<Integer> seq;
    for (long t = -(d + 3); t <= d + 3; ++t) seq.push_back(ell(poly, t));
    CHECK(recurrence_check(seq, d));
  }
}

TEST_CASE("h* numerators") {
  CHECK(hstar_numerator(ehrhart_polynomial(standard_simplex(2))).coeffs ==
        std::vector<Integer>{1, 0, 0});
  CHECK(hstar_numerator(ehrhart_polynomial(unit_cube(2))).coeffs ==
        std::vector<Integer>{1, 1, 0});
  CHECK(hstar_numerator(ehrhart_polynomial(reeve_tetrahedron(2))).coeffs ==
        std::vector<Integer>{1, 0, 1, 0});
}

TEST_CASE("h* invariants across the integral corpus") {
  for (const auto& [name, poly] : integral_corpus()) {
    CAPTURE(name);
    const Polynomial l = ehrhart_polynomial(poly);
    const HStarNumerator h = hstar_numerator(l);
    const long d = l.degree();
    CHECK(static_cast<long>(h.coeffs.size()) == d + 1);
    CHECK(h.coeffs[0] == 1);
    Integer sum = 0, factorial = 1;
    for (const Integer& c : h.coeffs) {
      CHECK(c >= 0);
      sum += c;
    }
    for (long k = 2; k <= d; ++k) factorial *= k;
    CHECK(Rational(sum) == Rational(factorial) * l.coeff(d));
  }
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity_check(pick_triangle(), 4));  // L(-t) = (t-1)^2
  CHECK(reciprocity_check(unit_cube(3), 4));
  for (const auto& [name, poly] : integral_corpus()) {
    CAPTURE(name);
    CHECK(reciprocity_check(poly, 3));
  }
}

TEST_CASE("interior polygon polynomial is the reflected closed one") {
  // For polygons, the interior count at t equals L(-t).
  const Polytope tri = pick_triangle();
  const Polynomial l = ehrhart_polynomial(tri);
  for (long t = 1; t <= 4; ++t)
    CHECK(l(-t) == Rational(count(tri, t, Containment::RelativeInterior)));
}

TEST_CASE("quasi-polynomial of the half segment") {
  const QuasiPolynomial q = quasi_polynomial(half_segment());
  CHECK(q.period == 2);
  CHECK(q.minimal_period == 2);
  CHECK(q.constituents[0].str() == "1,1/2");   // t/2 + 1
  CHECK(q.constituents[1].str() == "1/2,1/2"); // (t+1)/2
}

TEST_CASE("quasi-polynomial of an integral polytope is its polynomial") {
  const QuasiPolynomial q = quasi_polynomial(pick_triangle());
  CHECK(q.period == 1);
  CHECK(q.minimal_period == 1);
  CHECK(q.constituents[0] == ehrhart_polynomial(pick_triangle()));
}

TEST_CASE("quasi-polynomial of the half square") {
  const QuasiPolynomial q = quasi_polynomial(half_square());
  CHECK(q.period == 2);
  CHECK(q.minimal_period == 2);
  CHECK(q.constituents[0].str() == "1,2,1");  // (t+1)^2
  CHECK(q.constituents[1].str() == "0,0,1");  // t^2
}

TEST_CASE("minimal period divides the denominator on random simplices") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 12; ++i) {
    const Polytope s = random_rational_simplex(rng, 2, 4);
    const QuasiPolynomial q = quasi_polynomial(s);
    CHECK(q.period == s.denominator);
    CHECK(q.period % q.minimal_period == 0);
    for (const Polynomial& c : q.constituents)
      CHECK(c.degree() == static_cast<long>(s.dim));
  }
}

TEST_CASE("pick reports") {
  const PickReport tri = pick_report(pick_triangle());
  CHECK(tri.area == Rational(1));
  CHECK(tri.boundary_points == 4);
  CHECK(tri.interior_points == 0);
  CHECK(tri.pick_holds);
  CHECK(tri.polynomial_matches);

  const PickReport sq = pick_report(unit_cube(2));
  CHECK(sq.area == Rational(1));
  CHECK(sq.boundary_points == 4);
  CHECK(sq.interior_points == 0);
  CHECK(sq.pick_holds);

  const PickReport big = pick_report(build_polytope(
      {make_vector({0, 0}), make_vector({3, 0}), make_vector({0, 3})}));
  CHECK(big.area == Rational(9, 2));
  CHECK(big.boundary_points == 9);
  CHECK(big.interior_points == 1);
  CHECK(big.pick_holds);
  CHECK(big.polynomial_matches);

  CHECK_THROWS_AS(pick_report(unit_cube(3)), std::invalid_argument);
  CHECK_THROWS_AS(
      pick_report(build_polytope({make_vector({0, 0}), make_vector({1, 1})})),
      std::invalid_argument);
}

TEST_CASE("coefficient reports") {
  for (long h : {1L, 2L, 13L}) {
    const CoefficientReport r = coefficient_report(reeve_tetrahedron(h));
    CHECK(r.relative_volume == Rational(h, 6));
    CHECK(r.half_surface == Rational(1));
    CHECK(r.constant == Rational(1));
    CHECK(r.boundary_identity_holds);
  }
  const CoefficientReport seg = coefficient_report(
      build_polytope({make_vector({0, 0}), make_vector({2, 2})}));
  CHECK(seg.relative_volume == Rational(2));

  const CoefficientReport cube = coefficient_report(unit_cube(3));
  CHECK(cube.relative_volume == Rational(1));
  CHECK(cube.half_surface == Rational(3));
  CHECK(cube.boundary_lattice_points == 8);
  CHECK(cube.boundary_identity_holds);
}

TEST_CASE("triangulation volume equals the leading coefficient") {
  for (const auto& [name, poly] : integral_corpus()) {
    if (poly.dim != poly.ambient_dim) continue;
    CAPTURE(name);
    const Triangulation tri = pulling_triangulation(poly);
    Rational total;
    for (const Simplex& c : tri.cells) total += simplex_volume(tri, c);
    const Polynomial l = ehrhart_polynomial(poly);
    CHECK(total == l.coeff(l.degree()));
  }
}
