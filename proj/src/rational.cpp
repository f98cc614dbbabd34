#include "ehrhart/rational.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace ehrhart {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rational parse_rational(const std::string& token) {
  static const std::regex pattern(R"(^\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(token, m, pattern))
    throw std::invalid_argument("malformed rational '" + token + "'");
  Integer num(m[1].str());
  if (!m[2].matched) return Rational(num);
  Integer den(m[2].str());
  if (sgn(den) == 0)
    throw std::invalid_argument("zero denominator in rational '" + token + "'");
  return Rational(num, den);
}

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

}  // namespace ehrhart
