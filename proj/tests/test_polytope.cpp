#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrhart/corpus.hpp"
#include "ehrhart/polytope.hpp"

using namespace ehrhart;

namespace {

QVector random_point_in_box(std::mt19937_64& rng, const Polytope& p) {
  QVector x(p.ambient_dim);
  std::uniform_int_distribution<long> num(0, 16);
  for (Index i = 0; i < p.ambient_dim; ++i) {
    Rational mn = p.vertices[0](i), mx = mn;
    for (const QVector& v : p.vertices) {
      if (v(i) < mn) mn = v(i);
      if (v(i) > mx) mx = v(i);
    }
    x(i) = mn + (mx - mn) * Rational(num(rng), 16);
  }
  return x;
}

}  // namespace

TEST_CASE("build drops interior generators") {
  const Polytope p = build_polytope({make_vector({0, 0}), make_vector({2, 0}),
                                     make_vector({2, 1}), make_vector({1, 0})});
  CHECK(p.vertices.size() == 3);
  CHECK(p.dim == 2);
  CHECK(p.denominator == 1);
  CHECK(p.affine_hull.empty());
  CHECK(p.facets.size() == 3);
}

TEST_CASE("tetrahedron build") {
  const Polytope p = reeve_tetrahedron(2);
  CHECK(p.vertices.size() == 4);
  CHECK(p.dim == 3);
  CHECK(p.facets.size() == 4);
  for (const LinearCondition& f : p.facets) {
    int tight = 0;
    for (const QVector& v : p.vertices) {
      if (dot(f.normal, v) == f.offset) ++tight;
    }
    CHECK(tight == 3);
  }
}

TEST_CASE("rational segment") {
  const Polytope p = build_polytope({make_vector({0}), make_vector({Rational(1, 2)})});
  CHECK(p.dim == 1);
  CHECK(p.denominator == 2);
}

TEST_CASE("lower-dimensional segment in the plane") {
  const Polytope p = build_polytope({make_vector({0, 0}), make_vector({2, 2})});
  CHECK(p.dim == 1);
  REQUIRE(p.affine_hull.size() == 1);
  CHECK(p.affine_hull[0].normal == make_vector({1, -1}));
  CHECK(p.affine_hull[0].offset == Rational(0));
  CHECK(contains(p, make_vector({1, 1}), Containment::Closed));
  CHECK(!contains(p, make_vector({1, 0}), Containment::Closed));
  CHECK(contains(p, make_vector({1, 1}), Containment::RelativeInterior));
  CHECK(!contains(p, make_vector({0, 0}), Containment::RelativeInterior));
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(build_polytope({}), std::invalid_argument);
  CHECK_THROWS_AS(build_polytope({make_vector({1, 2}), make_vector({1})}),
                  std::invalid_argument);
}

TEST_CASE("single point is a dim-0 polytope") {
  const Polytope p = build_polytope({make_vector({3, Rational(1, 2)})});
  CHECK(p.dim == 0);
  CHECK(p.facets.empty());
  CHECK(p.affine_hull.size() == 2);
  CHECK(p.denominator == 2);
  CHECK(contains(p, make_vector({3, Rational(1, 2)}), Containment::RelativeInterior));
  CHECK(!contains(p, make_vector({3, 0}), Containment::Closed));
}

TEST_CASE("closed vs relative-interior membership") {
  const Polytope tri = pick_triangle();
  CHECK(contains(tri, make_vector({1, 0}), Containment::Closed));
  CHECK(!contains(tri, make_vector({1, 0}), Containment::RelativeInterior));

  const Polytope twice = dilate(tri, 2);
  CHECK(contains(twice, make_vector({3, 1}), Containment::RelativeInterior));
}

TEST_CASE("dilation scales vertices and offsets") {
  const Polytope tri = dilate(pick_triangle(), 3);
  CHECK(tri.vertices[2] == make_vector({6, 3}));
  CHECK(contains(tri, make_vector({6, 0}), Containment::Closed));

  const Polytope seg = dilate(half_segment(), 2);
  CHECK(seg.denominator == 1);
  CHECK(seg.vertices[1] == make_vector({1}));

  const Polytope reeve = dilate(reeve_tetrahedron(13), 2);
  CHECK(reeve.vertices[3] == make_vector({2, 2, 26}));
  CHECK_THROWS_AS(dilate(pick_triangle(), 0), std::invalid_argument);
}

TEST_CASE("membership agrees with convex-combination feasibility") {
  std::mt19937_64 rng(23);
  for (const auto& poly :
       {pick_triangle(), octahedron(), half_square(),
        build_polytope({make_vector({0, 0, 1}), make_vector({2, 2, 1}),
                        make_vector({0, 2, 1})})}) {
    for (int i = 0; i < 250; ++i) {
      const QVector x = random_point_in_box(rng, poly);
      CHECK(contains(poly, x, Containment::Closed) ==
            in_convex_hull(poly.vertices, x));
    }
  }
}

TEST_CASE("facets are tight on d affinely independent vertices and irredundant") {
  for (const auto& poly : {pick_triangle(), reeve_tetrahedron(2), octahedron(),
                           half_square(),
                           build_polytope({make_vector({0, 0}), make_vector({2, 2})})}) {
    const Index d = poly.dim;
    for (size_t fi = 0; fi < poly.facets.size(); ++fi) {
      const LinearCondition& f = poly.facets[fi];
      std::vector<QVector> tight;
      for (const QVector& v : poly.vertices) {
        if (dot(f.normal, v) == f.offset) tight.push_back(v);
      }
      REQUIRE(tight.size() >= static_cast<size_t>(d));
      QMatrix diffs(static_cast<Index>(tight.size()) - 1, poly.ambient_dim);
      for (size_t i = 1; i < tight.size(); ++i)
        diffs.row(static_cast<Index>(i - 1)) = (tight[i] - tight[0]).transpose();
      if (tight.size() > 1) CHECK(rank(diffs) == d - 1);

      // Witness just outside this facet, violating no other.
      QVector centroid = QVector::Zero(poly.ambient_dim);
      for (const QVector& v : tight) centroid += v;
      centroid *= Rational(1, static_cast<long>(tight.size()));
      bool found = false;
      Rational eps(1, 2);
      for (int k = 0; k < 64 && !found; ++k, eps *= Rational(1, 2)) {
        const QVector w = centroid + eps * f.normal;
        bool only_this = dot(f.normal, w) > f.offset;
        for (size_t fj = 0; fj < poly.facets.size() && only_this; ++fj) {
          if (fj == fi) continue;
          only_this = dot(poly.facets[fj].normal, w) <= poly.facets[fj].offset;
        }
        for (const LinearCondition& eq : poly.affine_hull) {
          if (dot(eq.normal, w) != eq.offset) only_this = false;
        }
        found = only_this;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("denominator of the denominator-dilate is 1") {
  for (const auto& [name, poly] : rational_corpus()) {
    CAPTURE(name);
    CHECK(dilate(poly, poly.denominator.get_si()).denominator == 1);
  }
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Polytope s = random_rational_simplex(rng, 3, 4);
    CHECK(dilate(s, s.denominator.get_si()).denominator == 1);
  }
}

TEST_CASE("build is idempotent on its own vertex output") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const Polytope p = random_convex_lattice_polygon(rng);
    const Polytope q = build_polytope(p.vertices);
    CHECK(q.vertices == p.vertices);
    CHECK(q.dim == p.dim);
    CHECK(q.facets.size() == p.facets.size());
  }
}
