#pragma once

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Fraction of a small disk around x lying inside the polygon: 0
/// outside, 1 in the interior, 1/2 on an open edge, interior-angle/2pi
/// at a vertex. Classification is exact; only the final angle is
/// floating point.
double solid_angle(const Polytope& p, const QVector& x);

struct SolidAngleReport {
  long t = 0;
  double weighted_sum = 0.0;  // sum of solid angles over lattice points of tP
  double expected = 0.0;      // area * t^2
  double abs_error = 0.0;
};

SolidAngleReport solid_angle_sum(const Polytope& p, long t);

/// Fits the weighted sums at t = 1..3 with a quadratic and checks that
/// the fit is an even function (odd coefficient below 1e-6), that it
/// extrapolates the sums up to t_max within 1e-6, and that the sum over
/// the reflected dilate -tP matches by central symmetry.
bool solid_angle_parity_check(const Polytope& p, long t_max);

}  // namespace ehrhart
