#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ehrhart {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always stored in lowest terms
/// with a positive denominator. Arithmetic is exact; operators return
/// plain values (no expression templates), so Rational can be used as
/// an Eigen scalar.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                  // NOLINT(runtime/explicit)
  Rational(int n) : v_(n) {}                   // NOLINT(runtime/explicit)
  Rational(const Integer& n) : v_(n) {}        // NOLINT(runtime/explicit)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  const Integer num() const { return v_.get_num(); }
  const Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Serializes as "p/q", or just "p" when q = 1.
  std::string str() const;

 private:
  mpq_class v_;  // canonical: gcd(num, den) = 1, den > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Parses "p/q" or "p". Throws std::invalid_argument naming the
/// offending token on malformed input or zero denominator.
Rational parse_rational(const std::string& token);

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
Integer binomial(unsigned long n, long k);

}  // namespace ehrhart
