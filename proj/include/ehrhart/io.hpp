#pragma once

#include <string>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Parses the polytope document {"ambient_dim": n, "vertices":
/// [["p/q", ...], ...]} and builds the polytope. Throws
/// std::invalid_argument with a diagnostic naming the offending token
/// on malformed rationals, ragged rows, or an empty vertex list.
Polytope parse_polytope_json(const std::string& text);

Polytope parse_polytope_file(const std::string& path);

/// Serializes the vertex set back to the same document format.
std::string serialize_polytope(const Polytope& p);

}  // namespace ehrhart
