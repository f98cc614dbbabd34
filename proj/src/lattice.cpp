#include "ehrhart/lattice.hpp"

#include <functional>
#include <stdexcept>

namespace ehrhart {

namespace {

struct Box {
  std::vector<long long> lo, hi;
  bool empty = false;
};

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("lattice enumeration: bounding box too large");
  return z.get_si();
}

Box bounding_box(const std::vector<QVector>& vertices, Index n) {
  Box box;
  box.lo.resize(n);
  box.hi.resize(n);
  for (Index i = 0; i < n; ++i) {
    Rational mn = vertices[0](i), mx = vertices[0](i);
    for (const QVector& v : vertices) {
      if (v(i) < mn) mn = v(i);
      if (v(i) > mx) mx = v(i);
    }
    box.lo[i] = to_ll(ceil(mn));
    box.hi[i] = to_ll(floor(mx));
    if (box.lo[i] > box.hi[i]) box.empty = true;
  }
  return box;
}

Box merge(const Box& a, const Box& b) {
  Box box = a;
  for (size_t i = 0; i < box.lo.size(); ++i) {
    box.lo[i] = std::min(box.lo[i], b.lo[i]);
    box.hi[i] = std::max(box.hi[i], b.hi[i]);
    if (box.lo[i] > box.hi[i]) box.empty = true;
  }
  return box;
}

// Integer-arithmetic form of a facet inequality n.x <= num/den (den > 0).
struct FastInequality {
  std::vector<Integer> normal;
  Integer num;
  Integer den;
};

std::vector<FastInequality> fast_facets(const Polytope& p) {
  std::vector<FastInequality> out;
  for (const LinearCondition& f : p.facets) {
    FastInequality q;
    q.normal.reserve(p.ambient_dim);
    for (Index i = 0; i < p.ambient_dim; ++i) q.normal.push_back(f.normal(i).num());
    q.num = f.offset.num();
    q.den = f.offset.den();
    out.push_back(std::move(q));
  }
  return out;
}

bool satisfies_facets(const std::vector<FastInequality>& facets,
                      const std::vector<long long>& x, Containment mode) {
  for (const FastInequality& f : facets) {
    Integer lhs = 0;
    for (size_t i = 0; i < x.size(); ++i) lhs += f.normal[i] * Integer(static_cast<long>(x[i]));
    lhs *= f.den;
    if (mode == Containment::Closed ? lhs > f.num : lhs >= f.num) return false;
  }
  return true;
}

// Enumerates the lattice points of q (mode-dependent boundary
// treatment). Affine-hull equations are eliminated first: only the
// free coordinates of the reduced system are scanned, the pivot
// coordinates are solved for and checked for integrality.
void for_each_lattice_point(
    const Polytope& q, Containment mode,
    const std::function<void(const std::vector<long long>&)>& visit) {
  const Index n = q.ambient_dim;
  const Box box = bounding_box(q.vertices, n);
  if (box.empty) return;

  const Index n_eq = static_cast<Index>(q.affine_hull.size());
  QMatrix sys(n_eq, n + 1);
  for (Index i = 0; i < n_eq; ++i) {
    sys.row(i).head(n) = q.affine_hull[i].normal.transpose();
    sys(i, n) = q.affine_hull[i].offset;
  }
  std::vector<Index> pivots;
  const QMatrix red = rref(sys, &pivots);
  std::vector<bool> is_pivot(n, false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  const std::vector<FastInequality> facets = fast_facets(q);
  std::vector<long long> point(n, 0);
  std::vector<long long> cursor(free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) cursor[k] = box.lo[free_cols[k]];

  while (true) {
    for (size_t k = 0; k < free_cols.size(); ++k) point[free_cols[k]] = cursor[k];
    bool ok = true;
    for (Index i = 0; i < static_cast<Index>(pivots.size()) && ok; ++i) {
      Rational val = red(i, n);
      for (size_t k = 0; k < free_cols.size(); ++k)
        val -= red(i, free_cols[k]) * Rational(static_cast<long>(cursor[k]));
      if (!val.is_integer()) {
        ok = false;
        break;
      }
      const long long iv = to_ll(val.num());
      const Index col = pivots[i];
      if (iv < box.lo[col] || iv > box.hi[col]) {
        ok = false;
        break;
      }
      point[col] = iv;
    }
    if (ok && satisfies_facets(facets, point, mode)) visit(point);

    size_t k = 0;
    for (; k < free_cols.size(); ++k) {
      if (++cursor[k] <= box.hi[free_cols[k]]) break;
      cursor[k] = box.lo[free_cols[k]];
    }
    if (k == free_cols.size()) return;
  }
}

QVector to_qvector(const std::vector<long long>& x) {
  QVector v(static_cast<Index>(x.size()));
  for (size_t i = 0; i < x.size(); ++i) v(static_cast<Index>(i)) = Rational(static_cast<long>(x[i]));
  return v;
}

}  // namespace

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::BoundingBox: return "bounding_box";
    case CountMethod::SimplexBarycentric: return "simplex_barycentric";
    case CountMethod::TriangulationIE: return "triangulation_ie";
  }
  return "unknown";
}

Integer count(const Polytope& p, long t, Containment mode) {
  if (t < 1) throw std::invalid_argument("count: dilation factor must be >= 1");
  const Polytope q = dilate(p, t);
  Integer total = 0;
  for_each_lattice_point(q, mode, [&](const std::vector<long long>&) { ++total; });
  return total;
}

CountReport count_report(const Polytope& p, long t) {
  CountReport r;
  r.t = t;
  r.closed = count(p, t, Containment::Closed);
  r.interior = count(p, t, Containment::RelativeInterior);
  r.boundary = r.closed - r.interior;
  r.method = CountMethod::BoundingBox;
  return r;
}

Integer ell(const Polytope& p, long t) {
  if (t > 0) return count(p, t, Containment::Closed);
  if (t == 0) return 1;
  const Integer interior = count(p, -t, Containment::RelativeInterior);
  return (p.dim % 2 == 0) ? interior : -interior;
}

Integer boundary_count(const Polytope& p, long t) {
  return count(p, t, Containment::Closed) -
         count(p, t, Containment::RelativeInterior);
}

Integer count_simplex_barycentric(const Polytope& simplex, long t,
                                  Containment mode) {
  if (static_cast<Index>(simplex.vertices.size()) != simplex.dim + 1)
    throw std::invalid_argument("count_simplex_barycentric: not a simplex");
  if (t < 1) throw std::invalid_argument("count_simplex_barycentric: t must be >= 1");
  const Index n = simplex.ambient_dim;
  const Index m = static_cast<Index>(simplex.vertices.size());
  QMatrix sys(n + 1, m);
  for (Index j = 0; j < m; ++j) {
    sys.col(j).head(n) = simplex.vertices[j];
    sys(n, j) = Rational(1);
  }
  const Polytope q = dilate(simplex, t);
  const Box box = bounding_box(q.vertices, n);
  if (box.empty) return 0;

  Integer total = 0;
  std::vector<long long> x(n);
  for (size_t i = 0; i < x.size(); ++i) x[i] = box.lo[i];
  while (true) {
    QVector rhs(n + 1);
    for (Index i = 0; i < n; ++i) rhs(i) = Rational(static_cast<long>(x[i]));
    rhs(n) = Rational(t);
    const LinearSolution sol = solve_linear(sys, rhs);
    if (sol.x) {
      bool inside = true;
      for (Index j = 0; j < m; ++j) {
        const int s = (*sol.x)(j).sign();
        if (mode == Containment::Closed ? s < 0 : s <= 0) {
          inside = false;
          break;
        }
      }
      if (inside) ++total;
    }
    size_t k = 0;
    for (; k < x.size(); ++k) {
      if (++x[k] <= box.hi[k]) break;
      x[k] = box.lo[k];
    }
    if (k == x.size()) break;
  }
  return total;
}

Integer count_triangulation(const Triangulation& tri, long t) {
  Integer total = 0;
  for (const Face& f : tri.faces)
    total += count(face_polytope(tri, f), t, Containment::RelativeInterior);
  return total;
}

CoveringReport verify_covering(const Polytope& simplex, long t) {
  const Index d = simplex.dim;
  if (static_cast<Index>(simplex.vertices.size()) != d + 1)
    throw std::invalid_argument("verify_covering: not a simplex");
  if (simplex.denominator != 1)
    throw std::invalid_argument("verify_covering: vertices must be integral");
  if (t <= -static_cast<long>(d) - 1)
    throw std::invalid_argument("verify_covering: t must exceed -d-1");

  CoveringReport report;
  report.t = t;
  const long dl = static_cast<long>(d);

  // Translate of a dilate: factor*S + base, valid for factor >= 0.
  auto make_translate = [&](long factor, const QVector& base) {
    std::vector<QVector> pts;
    if (factor == 0) {
      pts.push_back(base);
    } else {
      for (const QVector& v : simplex.vertices) pts.push_back(Rational(factor) * v + base);
    }
    return build_polytope(pts);
  };

  std::vector<Polytope> q_parts;  // Q_i = (t+d)S + v_i
  for (const QVector& v : simplex.vertices) q_parts.push_back(make_translate(t + dl, v));
  auto in_union = [&](const QVector& x) {
    for (const Polytope& q : q_parts) {
      if (contains(q, x, Containment::Closed)) return true;
    }
    return false;
  };

  const Polytope big = dilate(simplex, t + dl + 1);
  const long d1 = dl + 1;

  report.recurrence_lhs = ell(simplex, t + dl + 1);
  report.recurrence_rhs = 0;
  for (long k = 0; k <= dl; ++k) {
    const Integer term = binomial(d1, k) * ell(simplex, t + k);
    report.recurrence_rhs += ((dl - k) % 2 == 0) ? term : -term;
  }

  if (t >= 0) {
    Integer total = 0;
    for_each_lattice_point(big, Containment::Closed, [&](const std::vector<long long>& p) {
      ++total;
      const QVector x = to_qvector(p);
      if (in_union(x))
        ++report.q_union_count;
      else
        report.deficiency_points.push_back(x);
    });
    report.covering_exact = report.q_union_count == total;

    // Each k-fold intersection is a translate of (t+d+1-k)S; check the
    // counts pointwise and rebuild the union count by
    // inclusion-exclusion.
    report.intersections_match = true;
    Integer ie_sum = 0;
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      QVector base = QVector::Zero(simplex.ambient_dim);
      int k = 0;
      for (Index i = 0; i <= d; ++i) {
        if (mask & (1u << i)) {
          base += simplex.vertices[i];
          ++k;
        }
      }
      Integer actual = 0;
      for_each_lattice_point(big, Containment::Closed, [&](const std::vector<long long>& p) {
        const QVector x = to_qvector(p);
        for (Index i = 0; i <= d; ++i) {
          if ((mask & (1u << i)) && !contains(q_parts[i], x, Containment::Closed))
            return;
        }
        ++actual;
      });
      if (actual != ell(simplex, t + dl + 1 - k)) report.intersections_match = false;
      ie_sum += (k % 2 == 1) ? actual : -actual;
    }
    if (ie_sum != report.q_union_count) report.intersections_match = false;
    report.deficiency_matches = report.deficiency_points.empty();
    return report;
  }

  // -d-1 < t < 0: the union misses part of (t+d+1)S; the deficiency
  // must coincide with S' \ Q' where S' = tS* + sum(v_i) and
  // Q'_j = (t+1)S* + sum over i != j of v_i (interiors throughout).
  QVector vertex_sum = QVector::Zero(simplex.ambient_dim);
  for (const QVector& v : simplex.vertices) vertex_sum += v;
  const Polytope neg_t_dilate = dilate(simplex, -t);
  auto in_s_prime = [&](const QVector& x) {
    return contains(neg_t_dilate, vertex_sum - x, Containment::RelativeInterior);
  };
  std::optional<Polytope> q_prime_dilate;
  if (t < -1) q_prime_dilate = dilate(simplex, -(t + 1));
  auto in_q_prime = [&](const QVector& x) {
    if (!q_prime_dilate) return false;  // empty by definition at t = -1
    for (const QVector& v : simplex.vertices) {
      if (contains(*q_prime_dilate, (vertex_sum - v) - x, Containment::RelativeInterior))
        return true;
    }
    return false;
  };

  // Box covering both candidate regions.
  std::vector<QVector> s_prime_corners;
  for (const QVector& v : simplex.vertices)
    s_prime_corners.push_back(Rational(t) * v + vertex_sum);
  const Box box = merge(bounding_box(big.vertices, simplex.ambient_dim),
                        bounding_box(s_prime_corners, simplex.ambient_dim));

  report.deficiency_matches = true;
  std::vector<long long> x(simplex.ambient_dim);
  for (size_t i = 0; i < x.size(); ++i) x[i] = box.lo[i];
  while (!box.empty) {
    const QVector p = to_qvector(x);
    const bool in_big = contains(big, p, Containment::Closed);
    const bool covered = in_big && in_union(p);
    if (covered) ++report.q_union_count;
    const bool lhs = in_big && !covered;
    const bool rhs = in_s_prime(p) && !in_q_prime(p);
    if (lhs != rhs) report.deficiency_matches = false;
    if (lhs) report.deficiency_points.push_back(p);
    size_t k = 0;
    for (; k < x.size(); ++k) {
      if (++x[k] <= box.hi[k]) break;
      x[k] = box.lo[k];
    }
    if (k == x.size()) break;
  }
  report.covering_exact = report.deficiency_points.empty();

  // Union count identity for the negative range: the alternating sum
  // runs only over the intersections that are genuine dilates.
  Integer rhs_sum = 0;
  for (long k = 1; k <= t + dl + 1; ++k) {
    const Integer term = binomial(d1, d1 - k) * ell(simplex, t + dl + 1 - k);
    rhs_sum += (k % 2 == 1) ? term : -term;
  }
  report.intersections_match = rhs_sum == report.q_union_count;
  return report;
}

}  // namespace ehrhart
