#pragma once

#include <string>
#include <vector>

#include "ehrhart/triangulation.hpp"

namespace ehrhart {

enum class CountMethod { BoundingBox, SimplexBarycentric, TriangulationIE };

std::string to_string(CountMethod m);

struct CountReport {
  long t = 0;
  Integer closed = 0;
  Integer interior = 0;
  Integer boundary = 0;  // closed - interior
  CountMethod method = CountMethod::BoundingBox;
};

/// Exact lattice-point count of tP, by enumerating the integer bounding
/// box with affine-hull slices eliminated first. t >= 1.
Integer count(const Polytope& p, long t, Containment mode);

CountReport count_report(const Polytope& p, long t);

/// The signed counting function: closed count for t > 0, 1 at t = 0,
/// and (-1)^dim times the interior count of |t|P for t < 0.
Integer ell(const Polytope& p, long t);

Integer boundary_count(const Polytope& p, long t);

/// Independent counting route for simplices: per candidate lattice
/// point, solve the barycentric system exactly and test the sign
/// constraints.
Integer count_simplex_barycentric(const Polytope& simplex, long t, Containment mode);

/// Independent counting route via a triangulation: sum of relative-
/// interior counts over all faces (the disjoint-partition identity).
Integer count_triangulation(const Triangulation& tri, long t);

struct CoveringReport {
  long t = 0;
  Integer q_union_count = 0;  // lattice points of the union of the translates
  std::vector<QVector> deficiency_points;  // in (t+d+1)P but in no translate
  Integer recurrence_lhs = 0;
  Integer recurrence_rhs = 0;
  bool covering_exact = false;      // t >= 0: union equals (t+d+1)P pointwise
  bool intersections_match = false; // t >= 0: every k-fold intersection count
                                    // equals the predicted translate count
  bool deficiency_matches = false;  // t < 0: deficiency equals the interior
                                    // translate predicted for it
};

/// Verifies the simplex covering construction at dilation offset t,
/// -d-1 < t. Throws on non-simplex or non-integral input.
CoveringReport verify_covering(const Polytope& simplex, long t);

}  // namespace ehrhart
