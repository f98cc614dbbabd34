#pragma once

#include <vector>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

/// A linear condition normal . x (= or <=) offset. Normals are
/// primitive integer vectors; the relation is carried by context
/// (equations in Polytope::affine_hull, inequalities in
/// Polytope::facets).
struct LinearCondition {
  QVector normal;
  Rational offset;
};

enum class Containment { Closed, RelativeInterior };

/// Rational polytope in vertex representation with derived facet data.
/// Immutable after construction by build_polytope.
struct Polytope {
  Index ambient_dim = 0;
  std::vector<QVector> generators;  // input points
  std::vector<QVector> vertices;    // minimal hull-generating subset, lex-sorted
  Index dim = 0;
  std::vector<LinearCondition> affine_hull;  // equations cutting out the span
  std::vector<LinearCondition> facets;       // inequalities, tight on (d-1)-faces
  Integer denominator = 1;  // smallest D with D*P integral
};

/// Builds the polytope model from a nonempty point list. Throws
/// std::invalid_argument on empty input or ragged coordinate lengths.
Polytope build_polytope(const std::vector<QVector>& points);

bool contains(const Polytope& p, const QVector& x, Containment mode);

/// Dilate by a positive integer factor. Throws on t <= 0.
Polytope dilate(const Polytope& p, long t);

Polytope translate(const Polytope& p, const QVector& shift);

/// Vertices of a 2-dimensional polytope in ambient dimension 2 in
/// counterclockwise cyclic order.
std::vector<QVector> polygon_cycle(const Polytope& p);

/// Shoelace area over the cyclic boundary order (exact).
Rational polygon_area(const Polytope& p);

}  // namespace ehrhart
