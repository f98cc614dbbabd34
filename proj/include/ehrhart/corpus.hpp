#pragma once

#include <random>
#include <string>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

Polytope pick_triangle();                 // (0,0), (2,0), (2,1)
Polytope unit_cube(int d);
Polytope standard_simplex(int d);         // conv{0, e_1, ..., e_d}
Polytope reeve_tetrahedron(long h);       // conv{0, e_1, e_2, (1,1,h)}
Polytope octahedron();                    // conv{+-e_1, +-e_2, +-e_3}
Polytope half_segment();                  // [0, 1/2]
Polytope half_square();                   // vertices (+-1/2, +-1/2)

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/// Fixed integral test corpus: Pick triangle, unit cubes and standard
/// simplices through dimension 4, Reeve tetrahedra h = 1, 2, 13, and
/// the octahedron.
std::vector<NamedPolytope> integral_corpus();

/// Fixed rational corpus: half segment and half square.
std::vector<NamedPolytope> rational_corpus();

/// Convex hull of random lattice points in a small square; always
/// full-dimensional.
Polytope random_convex_lattice_polygon(std::mt19937_64& rng);

/// Full-dimensional random simplex with coordinates of bounded
/// denominator.
Polytope random_rational_simplex(std::mt19937_64& rng, int max_dim, int max_den);

}  // namespace ehrhart
