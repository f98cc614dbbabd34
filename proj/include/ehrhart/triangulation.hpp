#pragma once

#include <functional>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// d-simplex given by indices into the parent polytope's vertex list.
struct Simplex {
  std::vector<int> vertex_ids;  // sorted, d+1 entries
  int dim = 0;
};

struct Face {
  std::vector<int> vertex_ids;  // sorted
  int dim = 0;
  bool on_boundary = false;  // lies inside some facet of the parent polytope
};

struct Triangulation {
  Polytope polytope;
  std::vector<Simplex> cells;  // top-dimensional
  std::vector<Face> faces;     // all faces of all cells, deduplicated
};

/// Pulling triangulation: cone the lexicographically smallest vertex
/// over the recursively triangulated facets not containing it. Uses
/// only vertices of the polytope; deterministic.
Triangulation pulling_triangulation(const Polytope& p);

std::vector<Face> interior_faces(const Triangulation& t);

/// Builds the sub-polytope spanned by a face's vertices.
Polytope face_polytope(const Triangulation& t, const Face& f);

/// Normalized volume |det| / d! of a full-dimensional cell.
Rational simplex_volume(const Triangulation& t, const Simplex& cell);

using LatticeCounter =
    std::function<Integer(const Polytope&, long t, Containment)>;

/// Checks, for each t, both identities tying the polytope count to its
/// triangulation: the disjoint partition into relative interiors of
/// faces, and the signed sum over faces not contained in the boundary.
bool mobius_identity_check(const Triangulation& t,
                           const std::vector<long>& t_values,
                           const LatticeCounter& counter);

}  // namespace ehrhart
