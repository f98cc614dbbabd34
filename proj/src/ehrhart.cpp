#include "ehrhart/ehrhart.hpp"

#include <stdexcept>

namespace ehrhart {

Polynomial ehrhart_polynomial(const Polytope& p) {
  if (p.denominator != 1)
    throw std::invalid_argument("ehrhart_polynomial: polytope is not integral");
  const long d = static_cast<long>(p.dim);

  std::vector<Rational> nodes, values;
  for (long t = 0; t <= d; ++t) {
    nodes.emplace_back(t);
    values.emplace_back(ell(p, t));
  }
  const Polynomial l = Polynomial::interpolate(nodes, values);
  if (l.degree() != d)
    throw std::logic_error("ehrhart_polynomial: interpolant degree != dim");
  for (long t = d + 1; t <= 2 * d + 2; ++t) {
    if (l(t) != Rational(ell(p, t)))
      throw std::logic_error("ehrhart_polynomial: holdout count mismatch at t=" +
                             std::to_string(t));
  }
  return l;
}

bool recurrence_check(const std::vector<Integer>& f, int d) {
  const long m = static_cast<long>(f.size()) - 1;
  if (m < d + 1)
    throw std::invalid_argument("recurrence_check: need at least d+2 samples");
  for (long t = 0; t + d + 1 <= m; ++t) {
    Integer s = 0;
    for (int k = 0; k <= d + 1; ++k) {
      const Integer term = binomial(d + 1, k) * f[t + k];
      s += ((d + 1 - k) % 2 == 0) ? term : -term;
    }
    if (s != 0) return false;
  }
  return true;
}

HStarNumerator hstar_numerator(const Polynomial& l) {
  const long d = l.degree();
  HStarNumerator h;
  for (long k = 0; k <= d; ++k) {
    Rational c;
    for (long j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(d + 1, j)) * l(k - j);
      c += (j % 2 == 0) ? term : -term;
    }
    if (!c.is_integer())
      throw std::logic_error("hstar_numerator: non-integer coefficient");
    h.coeffs.push_back(c.num());
  }
  return h;
}

bool reciprocity_check(const Polytope& p, long t_max) {
  const Polynomial l = ehrhart_polynomial(p);
  const int d = static_cast<int>(p.dim);
  for (long t = 1; t <= t_max; ++t) {
    Rational lhs = l(-t);
    if (d % 2 != 0) lhs = -lhs;
    if (lhs != Rational(count(p, t, Containment::RelativeInterior))) return false;
  }
  return true;
}

QuasiPolynomial quasi_polynomial(const Polytope& p) {
  const long s = p.denominator.get_si();
  const long d = static_cast<long>(p.dim);
  QuasiPolynomial q;
  q.period = s;

  for (long j = 0; j < s; ++j) {
    std::vector<Rational> nodes, values;
    for (long k = 0; k <= d; ++k) {
      const long t = j + k * s;
      nodes.emplace_back(t);
      values.emplace_back(ell(p, t));  // ell(0) = 1 covers residue 0 at k = 0
    }
    const Polynomial c = Polynomial::interpolate(nodes, values);
    const long holdout = j + (d + 1) * s;
    if (c(holdout) != Rational(ell(p, holdout)))
      throw std::logic_error("quasi_polynomial: holdout mismatch at t=" +
                             std::to_string(holdout));
    q.constituents.push_back(c);
  }

  q.minimal_period = s;
  for (long m = 1; m < s; ++m) {
    if (s % m != 0) continue;
    bool collapses = true;
    for (long i = 0; i < s && collapses; ++i)
      collapses = q.constituents[i] == q.constituents[i % m];
    if (collapses) {
      q.minimal_period = m;
      break;
    }
  }

  // Quasi-reciprocity on a small window.
  for (long t = 1; t <= d + 1; ++t) {
    long r = (-t) % s;
    if (r < 0) r += s;
    Rational lhs = q.constituents[r](-t);
    if (d % 2 != 0) lhs = -lhs;
    if (lhs != Rational(count(p, t, Containment::RelativeInterior)))
      throw std::logic_error("quasi_polynomial: reciprocity mismatch at t=" +
                             std::to_string(t));
  }
  return q;
}

PickReport pick_report(const Polytope& p) {
  if (p.dim != 2 || p.ambient_dim != 2)
    throw std::invalid_argument("pick_report: need a full-dimensional polygon");
  if (p.denominator != 1)
    throw std::invalid_argument("pick_report: polygon must be integral");

  PickReport r;
  r.area = polygon_area(p);
  r.interior_points = count(p, 1, Containment::RelativeInterior);
  r.boundary_points = boundary_count(p, 1);
  r.pick_holds = r.area == Rational(r.interior_points) +
                               Rational(r.boundary_points, 2) - Rational(1);

  const Polynomial l = ehrhart_polynomial(p);
  r.polynomial_matches = l.degree() == 2 && l.coeff(2) == r.area &&
                         l.coeff(1) == Rational(r.boundary_points, 2) &&
                         l.coeff(0) == Rational(1);
  return r;
}

CoefficientReport coefficient_report(const Polytope& p) {
  const Polynomial l = ehrhart_polynomial(p);
  const long d = l.degree();
  CoefficientReport r;
  r.relative_volume = l.coeff(d);
  r.half_surface = l.coeff(d - 1);
  r.constant = l.coeff(0);
  if (r.constant != Rational(1))
    throw std::logic_error("coefficient_report: constant coefficient != 1");
  r.boundary_lattice_points = boundary_count(p, 1);
  Rational reflected = l(-1);
  if (d % 2 != 0) reflected = -reflected;
  r.boundary_identity_holds =
      Rational(r.boundary_lattice_points) == l(1) - reflected;
  return r;
}

}  // namespace ehrhart
