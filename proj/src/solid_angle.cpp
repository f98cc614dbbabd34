#include "ehrhart/solid_angle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ehrhart {

namespace {

void require_polygon(const Polytope& p) {
  if (p.dim != 2 || p.ambient_dim != 2)
    throw std::invalid_argument("solid angle: need a full-dimensional polygon");
}

double vertex_angle_fraction(const Polytope& p, const QVector& x) {
  const std::vector<QVector> cycle = polygon_cycle(p);
  const size_t m = cycle.size();
  for (size_t i = 0; i < m; ++i) {
    if (cycle[i] != x) continue;
    const QVector u = cycle[(i + m - 1) % m] - x;
    const QVector w = cycle[(i + 1) % m] - x;
    const double ux = u(0).to_double(), uy = u(1).to_double();
    const double wx = w(0).to_double(), wy = w(1).to_double();
    const double cross = ux * wy - uy * wx;
    const double dotp = ux * wx + uy * wy;
    const double angle = std::atan2(std::fabs(cross), dotp);  // in (0, pi)
    return angle / (2.0 * std::numbers::pi);
  }
  throw std::logic_error("solid_angle: boundary point on two facets is not a vertex");
}

}  // namespace

double solid_angle(const Polytope& p, const QVector& x) {
  require_polygon(p);
  if (!contains(p, x, Containment::Closed)) return 0.0;
  int tight = 0;
  for (const LinearCondition& facet : p.facets) {
    if (dot(facet.normal, x) == facet.offset) ++tight;
  }
  if (tight == 0) return 1.0;
  if (tight == 1) return 0.5;
  return vertex_angle_fraction(p, x);
}

SolidAngleReport solid_angle_sum(const Polytope& p, long t) {
  require_polygon(p);
  const Polytope q = dilate(p, t);

  long long lo[2], hi[2];
  for (int i = 0; i < 2; ++i) {
    Rational mn = q.vertices[0](i), mx = mn;
    for (const QVector& v : q.vertices) {
      if (v(i) < mn) mn = v(i);
      if (v(i) > mx) mx = v(i);
    }
    lo[i] = ceil(mn).get_si();
    hi[i] = floor(mx).get_si();
  }

  SolidAngleReport report;
  report.t = t;
  // Row-major order keeps the float accumulation deterministic.
  for (long long y = lo[1]; y <= hi[1]; ++y) {
    for (long long x = lo[0]; x <= hi[0]; ++x) {
      QVector pt = make_vector({Rational(static_cast<long>(x)),
                                Rational(static_cast<long>(y))});
      report.weighted_sum += solid_angle(q, pt);
    }
  }
  report.expected = polygon_area(p).to_double() * static_cast<double>(t) *
                    static_cast<double>(t);
  report.abs_error = std::fabs(report.weighted_sum - report.expected);
  return report;
}

bool solid_angle_parity_check(const Polytope& p, long t_max) {
  require_polygon(p);
  double a[4] = {0.0, 0.0, 0.0, 0.0};
  for (long t = 1; t <= 3; ++t) a[t] = solid_angle_sum(p, t).weighted_sum;

  // Quadratic through (1, a1), (2, a2), (3, a3).
  const double c2 = (a[3] - 2.0 * a[2] + a[1]) / 2.0;
  const double c1 = a[2] - a[1] - 3.0 * c2;
  const double c0 = a[1] - c1 - c2;
  if (std::fabs(c1) > 1e-6) return false;

  for (long t = 1; t <= t_max; ++t) {
    const double fit = c0 + c1 * t + c2 * t * t;
    const double direct = (t <= 3) ? a[t] : solid_angle_sum(p, t).weighted_sum;
    if (std::fabs(fit - direct) > 1e-6) return false;
  }

  // Central symmetry: the sum over -tP equals the sum over tP, so the
  // extension to negative arguments matches the even fit.
  std::vector<QVector> reflected;
  for (const QVector& v : p.vertices) reflected.push_back(-v);
  const Polytope neg = build_polytope(reflected);
  for (long t = 1; t <= std::min<long>(3, t_max); ++t) {
    const double neg_sum = solid_angle_sum(neg, t).weighted_sum;
    const double fit = c0 + c1 * (-t) + c2 * t * t;
    if (std::fabs(neg_sum - fit) > 1e-6) return false;
  }
  return true;
}

}  // namespace ehrhart
