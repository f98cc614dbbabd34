#include "ehrhart/linalg.hpp"

#include <stdexcept>

namespace ehrhart {

QVector make_vector(std::initializer_list<Rational> coords) {
  QVector v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (const Rational& c : coords) v(i++) = c;
  return v;
}

bool lex_less(const QVector& a, const QVector& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

QMatrix rref(QMatrix m, std::vector<Index>* pivots) {
  const Index rows = m.rows(), cols = m.cols();
  if (pivots) pivots->clear();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

Index rank(const QMatrix& a) {
  std::vector<Index> pivots;
  rref(a, &pivots);
  return static_cast<Index>(pivots.size());
}

QMatrix nullspace(const QMatrix& a) {
  std::vector<Index> pivots;
  const QMatrix r = rref(a, &pivots);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  QMatrix basis(cols, static_cast<Index>(free_cols.size()));
  basis.setConstant(Rational(0));
  for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
    const Index f = free_cols[k];
    basis(f, k) = Rational(1);
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i) {
      basis(pivots[i], k) = -r(i, f);
    }
  }
  return basis;
}

LinearSolution solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: A and b row counts differ");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots;
  const QMatrix r = rref(aug, &pivots);

  LinearSolution sol;
  for (Index p : pivots) {
    if (p == a.cols()) {  // pivot in the augmented column: inconsistent
      sol.rank = static_cast<Index>(pivots.size()) - 1;
      return sol;
    }
  }
  sol.rank = static_cast<Index>(pivots.size());
  QVector x(a.cols());
  x.setConstant(Rational(0));  // free variables at zero
  for (Index i = 0; i < sol.rank; ++i) x(pivots[i]) = r(i, a.cols());
  sol.x = x;
  return sol;
}

Rational determinant(QMatrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const Index n = a.rows();
  Rational det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i) {
      if (!a(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) return Rational(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool in_convex_hull(const std::vector<QVector>& points, const QVector& x) {
  if (points.empty()) return false;
  const Index n = x.size();
  const Index rows = n + 1;                               // coordinates + sum-to-one
  const Index m = static_cast<Index>(points.size());
  const Index total = m + rows;                           // original + artificial

  // Tableau rows: [a_1 .. a_m | z_1 .. z_rows | b], b >= 0.
  QMatrix tab(rows, total + 1);
  tab.setConstant(Rational(0));
  for (Index i = 0; i < rows; ++i) {
    const Rational rhs = (i < n) ? x(i) : Rational(1);
    const bool flip = rhs.sign() < 0;
    for (Index j = 0; j < m; ++j) {
      const Rational v = (i < n) ? points[j](i) : Rational(1);
      tab(i, j) = flip ? -v : v;
    }
    tab(i, m + i) = Rational(1);
    tab(i, total) = flip ? -rhs : rhs;
  }
  std::vector<Index> basis(rows);
  for (Index i = 0; i < rows; ++i) basis[i] = m + i;

  // Phase-1 objective: minimize the sum of artificials. Reduced cost of
  // column j is -sum_i tab(i, j) while all artificials are basic; kept
  // incrementally through pivots.
  QVector cost(total);
  for (Index j = 0; j < total; ++j) {
    Rational s;
    for (Index i = 0; i < rows; ++i) s += tab(i, j);
    cost(j) = (j < m) ? -s : Rational(0);
  }
  Rational obj;
  for (Index i = 0; i < rows; ++i) obj += tab(i, total);

  while (true) {
    Index enter = -1;
    for (Index j = 0; j < total; ++j) {  // Bland: lowest index
      if (cost(j).sign() < 0) { enter = j; break; }
    }
    if (enter < 0) break;
    Index leave = -1;
    Rational best;
    for (Index i = 0; i < rows; ++i) {
      if (tab(i, enter).sign() <= 0) continue;
      const Rational ratio = tab(i, total) / tab(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen for this system
    const Rational inv = Rational(1) / tab(leave, enter);
    for (Index j = 0; j <= total; ++j) tab(leave, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == leave || tab(i, enter).is_zero()) continue;
      const Rational f = tab(i, enter);
      for (Index j = 0; j <= total; ++j) tab(i, j) -= f * tab(leave, j);
    }
    const Rational fc = cost(enter);
    for (Index j = 0; j < total; ++j) cost(j) -= fc * tab(leave, j);
    obj += fc * tab(leave, total);
    basis[leave] = enter;
  }
  return obj.is_zero();
}

}  // namespace ehrhart
