#pragma once

#include <vector>

#include "ehrhart/lattice.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

/// The degree-d polynomial agreeing with the lattice-point count of tP
/// for integral P. Interpolated at t = 0..d and validated against
/// direct counts at t = d+1..2d+2; throws std::logic_error on a holdout
/// mismatch and std::invalid_argument for non-integral input.
Polynomial ehrhart_polynomial(const Polytope& p);

/// True iff the alternating binomial recurrence of order d+1
/// annihilates the sequence (equivalently, f is a polynomial of degree
/// <= d on the sampled window). Throws if fewer than d+2 samples.
bool recurrence_check(const std::vector<Integer>& f, int d);

struct HStarNumerator {
  std::vector<Integer> coeffs;  // h*_0 .. h*_d
};

/// Numerator coefficients of sum_t L(t) z^t = h*(z) / (1-z)^(d+1).
/// Throws std::logic_error if any coefficient is non-integral.
HStarNumerator hstar_numerator(const Polynomial& l);

/// True iff (-1)^d L(-t) equals the enumerated interior count of tP for
/// every 1 <= t <= t_max.
bool reciprocity_check(const Polytope& p, long t_max);

struct QuasiPolynomial {
  long period = 1;                      // the polytope denominator
  std::vector<Polynomial> constituents; // indexed by t mod period
  long minimal_period = 1;

  Rational operator()(long t) const {
    long r = t % period;
    if (r < 0) r += period;
    return constituents[r](t);
  }
};

/// Constituent-wise interpolation from counts, with holdout validation
/// and a quasi-reciprocity check baked in (std::logic_error on either
/// failing).
QuasiPolynomial quasi_polynomial(const Polytope& p);

struct PickReport {
  Rational area;
  Integer boundary_points = 0;
  Integer interior_points = 0;
  bool pick_holds = false;        // area = interior + boundary/2 - 1
  bool polynomial_matches = false; // L(t) = A t^2 + (B/2) t + 1 coefficientwise
};

/// Pick's identity on a convex integral lattice polygon (dim 2,
/// ambient 2, denominator 1).
PickReport pick_report(const Polytope& p);

struct CoefficientReport {
  Rational relative_volume;  // leading coefficient
  Rational half_surface;     // coefficient of t^(d-1)
  Rational constant;         // always 1
  Integer boundary_lattice_points = 0;
  bool boundary_identity_holds = false;  // #(boundary) = L(1) - (-1)^d L(-1)
};

CoefficientReport coefficient_report(const Polytope& p);

}  // namespace ehrhart
