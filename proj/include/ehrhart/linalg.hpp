#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "ehrhart/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<ehrhart::Rational> : GenericNumTraits<ehrhart::Rational> {
  typedef ehrhart::Rational Real;
  typedef ehrhart::Rational NonInteger;
  typedef ehrhart::Rational Nested;
  typedef ehrhart::Rational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace ehrhart {

using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

QVector make_vector(std::initializer_list<Rational> coords);

bool lex_less(const QVector& a, const QVector& b);

Rational dot(const QVector& a, const QVector& b);

/// Reduced row echelon form via Gaussian elimination; the pivot of each
/// row is the first nonzero entry in column order (no magnitude
/// heuristics, the field is exact). `pivots` receives the pivot column
/// of each nonzero row.
QMatrix rref(QMatrix m, std::vector<Index>* pivots = nullptr);

Index rank(const QMatrix& a);

/// Columns form a basis of the kernel of `a`.
QMatrix nullspace(const QMatrix& a);

struct LinearSolution {
  std::optional<QVector> x;  // one exact solution, absent if inconsistent
  Index rank = 0;
};

/// Solves A x = b exactly. Throws std::invalid_argument on a row-count
/// mismatch between A and b.
LinearSolution solve_linear(const QMatrix& a, const QVector& b);

Rational determinant(QMatrix a);

/// Exact feasibility of {sum a_i p_i = x, sum a_i = 1, a_i >= 0}:
/// phase-1 simplex with Bland's rule over rationals.
bool in_convex_hull(const std::vector<QVector>& points, const QVector& x);

}  // namespace ehrhart
