#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ehrhart {

namespace {

// Scale to a primitive integer normal; the offset is scaled along.
void make_primitive(QVector& normal, Rational& offset) {
  Integer l = 1;
  for (Index i = 0; i < normal.size(); ++i) l = lcm(l, normal(i).den());
  Integer g = 0;
  for (Index i = 0; i < normal.size(); ++i) {
    g = gcd(g, Integer(normal(i).num() * (l / normal(i).den())));
  }
  if (g == 0) g = 1;
  const Rational scale(l, g);
  for (Index i = 0; i < normal.size(); ++i) normal(i) *= scale;
  offset *= scale;
}

// Canonical sign for equations: first nonzero coefficient positive.
void fix_equation_sign(QVector& normal, Rational& offset) {
  for (Index i = 0; i < normal.size(); ++i) {
    if (normal(i).is_zero()) continue;
    if (normal(i).sign() < 0) {
      normal = -normal;
      offset = -offset;
    }
    return;
  }
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Integer vertex_denominator(const std::vector<QVector>& vertices) {
  Integer d = 1;
  for (const QVector& v : vertices) {
    for (Index i = 0; i < v.size(); ++i) d = lcm(d, v(i).den());
  }
  return d;
}

std::string condition_key(const LinearCondition& c) {
  std::string key = c.offset.str();
  for (Index i = 0; i < c.normal.size(); ++i) key += "|" + c.normal(i).str();
  return key;
}

}  // namespace

Polytope build_polytope(const std::vector<QVector>& points) {
  if (points.empty()) throw std::invalid_argument("build_polytope: empty point list");
  const Index n = points[0].size();
  for (const QVector& p : points) {
    if (p.size() != n)
      throw std::invalid_argument("build_polytope: ragged coordinate lengths");
  }

  Polytope poly;
  poly.ambient_dim = n;
  poly.generators = points;

  // Deduplicate, then keep the points that are not convex combinations
  // of the others.
  std::vector<QVector> distinct;
  for (const QVector& p : points) {
    bool seen = false;
    for (const QVector& q : distinct) {
      if (q == p) { seen = true; break; }
    }
    if (!seen) distinct.push_back(p);
  }
  for (size_t i = 0; i < distinct.size(); ++i) {
    std::vector<QVector> others;
    for (size_t j = 0; j < distinct.size(); ++j) {
      if (j != i) others.push_back(distinct[j]);
    }
    if (others.empty() || !in_convex_hull(others, distinct[i]))
      poly.vertices.push_back(distinct[i]);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less);

  const Index v = static_cast<Index>(poly.vertices.size());
  QMatrix diffs(v - 1, n);
  for (Index i = 1; i < v; ++i)
    diffs.row(i - 1) = (poly.vertices[i] - poly.vertices[0]).transpose();
  poly.dim = (v > 1) ? rank(diffs) : 0;

  // Affine hull: kernel vectors of the difference matrix give normals.
  const QMatrix normals = (v > 1) ? nullspace(diffs) : QMatrix::Identity(n, n);
  for (Index k = 0; k < normals.cols(); ++k) {
    LinearCondition eq;
    eq.normal = normals.col(k);
    eq.offset = dot(eq.normal, poly.vertices[0]);
    make_primitive(eq.normal, eq.offset);
    fix_equation_sign(eq.normal, eq.offset);
    poly.affine_hull.push_back(eq);
  }

  const Index d = poly.dim;
  if (d >= 1) {
    // Basis of the direction space of the affine hull.
    QMatrix basis(d, n);
    Index got = 0;
    QMatrix probe(0, n);
    for (Index i = 0; i < v - 1 && got < d; ++i) {
      QMatrix trial(got + 1, n);
      if (got > 0) trial.topRows(got) = probe;
      trial.row(got) = diffs.row(i);
      if (rank(trial) == got + 1) {
        basis.row(got) = diffs.row(i);
        probe = trial;
        ++got;
      }
    }

    // Candidate facet hyperplanes through each d-subset of vertices
    // spanning d-1 dimensions; keep those valid on all vertices.
    std::map<std::string, LinearCondition> found;
    for (const std::vector<int>& sub : combinations(static_cast<int>(v), static_cast<int>(d))) {
      QMatrix m(d - 1, d);
      for (Index j = 0; j + 1 < d; ++j) {
        const QVector w = poly.vertices[sub[j + 1]] - poly.vertices[sub[0]];
        for (Index k = 0; k < d; ++k) m(j, k) = dot(basis.row(k).transpose(), w);
      }
      const QMatrix kernel = nullspace(m);
      if (kernel.cols() != 1) continue;  // subset does not span d-1 dims
      QVector normal = QVector::Zero(n);
      for (Index k = 0; k < d; ++k)
        normal += kernel(k, 0) * basis.row(k).transpose();
      Rational offset = dot(normal, poly.vertices[sub[0]]);

      bool all_le = true, all_ge = true;
      for (const QVector& vert : poly.vertices) {
        const Rational val = dot(normal, vert);
        if (val > offset) all_le = false;
        if (val < offset) all_ge = false;
      }
      if (!all_le && !all_ge) continue;
      if (!all_le) {
        normal = -normal;
        offset = -offset;
      }
      LinearCondition facet{std::move(normal), std::move(offset)};
      make_primitive(facet.normal, facet.offset);
      found.emplace(condition_key(facet), std::move(facet));
    }
    for (auto& [key, facet] : found) poly.facets.push_back(std::move(facet));
  }

  poly.denominator = vertex_denominator(poly.vertices);
  return poly;
}

bool contains(const Polytope& p, const QVector& x, Containment mode) {
  if (x.size() != p.ambient_dim)
    throw std::invalid_argument("contains: point dimension mismatch");
  for (const LinearCondition& eq : p.affine_hull) {
    if (dot(eq.normal, x) != eq.offset) return false;
  }
  for (const LinearCondition& facet : p.facets) {
    const Rational val = dot(facet.normal, x);
    if (mode == Containment::Closed ? val > facet.offset : val >= facet.offset)
      return false;
  }
  return true;
}

Polytope dilate(const Polytope& p, long t) {
  if (t <= 0) throw std::invalid_argument("dilate: factor must be positive");
  Polytope q = p;
  const Rational f(t);
  for (QVector& v : q.vertices) v *= f;
  for (QVector& v : q.generators) v *= f;
  for (LinearCondition& eq : q.affine_hull) eq.offset *= f;
  for (LinearCondition& facet : q.facets) facet.offset *= f;
  q.denominator = vertex_denominator(q.vertices);
  return q;
}

Polytope translate(const Polytope& p, const QVector& shift) {
  if (shift.size() != p.ambient_dim)
    throw std::invalid_argument("translate: shift dimension mismatch");
  Polytope q = p;
  for (QVector& v : q.vertices) v += shift;
  for (QVector& v : q.generators) v += shift;
  for (LinearCondition& eq : q.affine_hull) eq.offset += dot(eq.normal, shift);
  for (LinearCondition& facet : q.facets) facet.offset += dot(facet.normal, shift);
  q.denominator = vertex_denominator(q.vertices);
  return q;
}

std::vector<QVector> polygon_cycle(const Polytope& p) {
  if (p.dim != 2 || p.ambient_dim != 2)
    throw std::invalid_argument("polygon_cycle: polytope is not a planar polygon");
  QVector centroid = QVector::Zero(2);
  for (const QVector& v : p.vertices) centroid += v;
  centroid *= Rational(1, static_cast<long>(p.vertices.size()));

  auto half = [&](const QVector& v) {
    const Rational dx = v(0) - centroid(0), dy = v(1) - centroid(1);
    return (dy > Rational(0) || (dy.is_zero() && dx > Rational(0))) ? 0 : 1;
  };
  std::vector<QVector> cycle = p.vertices;
  std::sort(cycle.begin(), cycle.end(), [&](const QVector& a, const QVector& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rational ax = a(0) - centroid(0), ay = a(1) - centroid(1);
    const Rational bx = b(0) - centroid(0), by = b(1) - centroid(1);
    return (ax * by - ay * bx) > Rational(0);
  });
  return cycle;
}

Rational polygon_area(const Polytope& p) {
  const std::vector<QVector> cycle = polygon_cycle(p);
  Rational twice;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const QVector& a = cycle[i];
    const QVector& b = cycle[(i + 1) % cycle.size()];
    twice += a(0) * b(1) - b(0) * a(1);
  }
  return abs(twice) * Rational(1, 2);
}

}  // namespace ehrhart
