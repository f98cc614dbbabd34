#include "ehrhart/triangulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ehrhart {

namespace {

// Recursively triangulate the polytope spanned by the given global
// vertex ids. Vertices are lex-sorted in the parent, so the pulled
// vertex is the one with the smallest id.
void triangulate_ids(const Polytope& parent, const std::vector<int>& ids,
                     std::vector<std::vector<int>>* cells) {
  std::vector<QVector> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back(parent.vertices[id]);
  const Polytope sub = build_polytope(pts);

  if (static_cast<Index>(ids.size()) == sub.dim + 1) {
    cells->push_back(ids);
    return;
  }
  const int pulled = ids.front();
  const QVector& apex = parent.vertices[pulled];
  for (const LinearCondition& facet : sub.facets) {
    if (dot(facet.normal, apex) == facet.offset) continue;  // contains apex
    std::vector<int> facet_ids;
    for (int id : ids) {
      if (dot(facet.normal, parent.vertices[id]) == facet.offset)
        facet_ids.push_back(id);
    }
    std::vector<std::vector<int>> sub_cells;
    triangulate_ids(parent, facet_ids, &sub_cells);
    for (std::vector<int>& cell : sub_cells) {
      cell.insert(cell.begin(), pulled);
      cells->push_back(std::move(cell));
    }
  }
}

bool face_on_boundary(const Polytope& p, const std::vector<int>& ids) {
  for (const LinearCondition& facet : p.facets) {
    bool tight = true;
    for (int id : ids) {
      if (dot(facet.normal, p.vertices[id]) != facet.offset) {
        tight = false;
        break;
      }
    }
    if (tight) return true;
  }
  return false;
}

}  // namespace

Triangulation pulling_triangulation(const Polytope& p) {
  if (p.vertices.empty())
    throw std::invalid_argument("pulling_triangulation: polytope has no vertices");
  Triangulation t;
  t.polytope = p;

  std::vector<int> all_ids(p.vertices.size());
  for (size_t i = 0; i < p.vertices.size(); ++i) all_ids[i] = static_cast<int>(i);
  std::vector<std::vector<int>> raw_cells;
  triangulate_ids(p, all_ids, &raw_cells);

  std::map<std::vector<int>, Face> face_set;
  for (std::vector<int>& ids : raw_cells) {
    std::sort(ids.begin(), ids.end());
    Simplex cell;
    cell.vertex_ids = ids;
    cell.dim = static_cast<int>(ids.size()) - 1;
    // Every nonempty vertex subset of a simplex is one of its faces.
    const int m = static_cast<int>(ids.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) sub.push_back(ids[i]);
      }
      if (face_set.count(sub)) continue;
      Face f;
      f.vertex_ids = sub;
      f.dim = static_cast<int>(sub.size()) - 1;
      f.on_boundary = face_on_boundary(p, sub);
      face_set.emplace(std::move(sub), std::move(f));
    }
    t.cells.push_back(std::move(cell));
  }
  for (auto& [ids, face] : face_set) t.faces.push_back(std::move(face));
  return t;
}

std::vector<Face> interior_faces(const Triangulation& t) {
  std::vector<Face> out;
  for (const Face& f : t.faces) {
    if (!f.on_boundary) out.push_back(f);
  }
  return out;
}

Polytope face_polytope(const Triangulation& t, const Face& f) {
  std::vector<QVector> pts;
  for (int id : f.vertex_ids) pts.push_back(t.polytope.vertices[id]);
  return build_polytope(pts);
}

Rational simplex_volume(const Triangulation& t, const Simplex& cell) {
  const Index d = t.polytope.dim;
  if (t.polytope.ambient_dim != d)
    throw std::invalid_argument("simplex_volume: polytope not full-dimensional");
  QMatrix m(d, d);
  const QVector& base = t.polytope.vertices[cell.vertex_ids[0]];
  for (Index i = 0; i < d; ++i)
    m.row(i) = (t.polytope.vertices[cell.vertex_ids[i + 1]] - base).transpose();
  Rational vol = abs(determinant(m));
  for (long k = 2; k <= d; ++k) vol /= Rational(k);
  return vol;
}

bool mobius_identity_check(const Triangulation& t,
                           const std::vector<long>& t_values,
                           const LatticeCounter& counter) {
  std::vector<Polytope> face_polys;
  face_polys.reserve(t.faces.size());
  for (const Face& f : t.faces) face_polys.push_back(face_polytope(t, f));

  const int d = static_cast<int>(t.polytope.dim);
  for (long tv : t_values) {
    const Integer closed = counter(t.polytope, tv, Containment::Closed);

    // Partition: every point lies in the relative interior of exactly
    // one face.
    Integer partition = 0;
    for (const Polytope& fp : face_polys)
      partition += counter(fp, tv, Containment::RelativeInterior);
    if (partition != closed) return false;

    // Signed sum over faces not inside the boundary.
    Integer signed_sum = 0;
    for (size_t i = 0; i < t.faces.size(); ++i) {
      if (t.faces[i].on_boundary) continue;
      const Integer c = counter(face_polys[i], tv, Containment::Closed);
      signed_sum += (t.faces[i].dim % 2 == 0) ? c : -c;
    }
    if (d % 2 != 0) signed_sum = -signed_sum;
    if (signed_sum != closed) return false;
  }
  return true;
}

}  // namespace ehrhart
