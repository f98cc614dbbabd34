#pragma once

#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Dense rational-coefficient polynomial, constant term first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(coeffs_.size())) ? coeffs_[i]
                                                             : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Comma-joined coefficient strings, constant term first.
  std::string str() const;

  /// Unique interpolant of degree < nodes.size() through the given
  /// exact points (Newton divided differences).
  static Polynomial interpolate(const std::vector<Rational>& nodes,
                                const std::vector<Rational>& values);

 private:
  std::vector<Rational> coeffs_;  // trailing zeros trimmed
};

}  // namespace ehrhart
