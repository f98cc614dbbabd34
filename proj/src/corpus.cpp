#include "ehrhart/corpus.hpp"

namespace ehrhart {

Polytope pick_triangle() {
  return build_polytope({make_vector({0, 0}), make_vector({2, 0}),
                         make_vector({2, 1})});
}

Polytope unit_cube(int d) {
  std::vector<QVector> pts;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    QVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Rational(static_cast<long>((mask >> i) & 1u));
    pts.push_back(std::move(v));
  }
  return build_polytope(pts);
}

Polytope standard_simplex(int d) {
  std::vector<QVector> pts;
  pts.push_back(QVector::Zero(d));
  for (int i = 0; i < d; ++i) {
    QVector v = QVector::Zero(d);
    v(i) = Rational(1);
    pts.push_back(std::move(v));
  }
  return build_polytope(pts);
}

Polytope reeve_tetrahedron(long h) {
  return build_polytope({make_vector({0, 0, 0}), make_vector({1, 0, 0}),
                         make_vector({0, 1, 0}),
                         make_vector({1, 1, Rational(h)})});
}

Polytope octahedron() {
  std::vector<QVector> pts;
  for (int i = 0; i < 3; ++i) {
    for (int s : {1, -1}) {
      QVector v = QVector::Zero(3);
      v(i) = Rational(s);
      pts.push_back(std::move(v));
    }
  }
  return build_polytope(pts);
}

Polytope half_segment() {
  return build_polytope({make_vector({0}), make_vector({Rational(1, 2)})});
}

Polytope half_square() {
  std::vector<QVector> pts;
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      pts.push_back(make_vector({Rational(sx, 2), Rational(sy, 2)}));
    }
  }
  return build_polytope(pts);
}

std::vector<NamedPolytope> integral_corpus() {
  std::vector<NamedPolytope> corpus;
  corpus.push_back({"pick_triangle", pick_triangle()});
  for (int d = 1; d <= 4; ++d) {
    corpus.push_back({"unit_cube_" + std::to_string(d), unit_cube(d)});
    corpus.push_back({"standard_simplex_" + std::to_string(d), standard_simplex(d)});
  }
  for (long h : {1L, 2L, 13L}) {
    corpus.push_back({"reeve_" + std::to_string(h), reeve_tetrahedron(h)});
  }
  corpus.push_back({"octahedron", octahedron()});
  return corpus;
}

std::vector<NamedPolytope> rational_corpus() {
  return {{"half_segment", half_segment()}, {"half_square", half_square()}};
}

Polytope random_convex_lattice_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, 8);
  std::uniform_int_distribution<int> npts(3, 9);
  while (true) {
    std::vector<QVector> pts;
    const int k = npts(rng);
    for (int i = 0; i < k; ++i)
      pts.push_back(make_vector({Rational(coord(rng)), Rational(coord(rng))}));
    const Polytope p = build_polytope(pts);
    if (p.dim == 2) return p;
  }
}

Polytope random_rational_simplex(std::mt19937_64& rng, int max_dim, int max_den) {
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int d = dim_dist(rng);
  // One denominator for the whole simplex so the polytope denominator
  // stays <= max_den; coordinates stay in [0, 2] so dilate enumeration
  // boxes stay small.
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, 2 * den);
  while (true) {
    std::vector<QVector> pts;
    for (int i = 0; i <= d; ++i) {
      QVector v(d);
      for (int c = 0; c < d; ++c) v(c) = Rational(num_dist(rng), den);
      pts.push_back(std::move(v));
    }
    const Polytope p = build_polytope(pts);
    if (p.dim == d && static_cast<int>(p.vertices.size()) == d + 1) return p;
  }
}

}  // namespace ehrhart
