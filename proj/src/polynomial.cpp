#include "ehrhart/polynomial.hpp"

#include <stdexcept>

namespace ehrhart {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += coeffs_[i].str();
  }
  return out;
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& nodes,
                                   const std::vector<Rational>& values) {
  const size_t n = nodes.size();
  if (n == 0 || values.size() != n)
    throw std::invalid_argument("interpolate: node/value count mismatch");

  // Divided-difference table.
  std::vector<Rational> dd = values;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // product of (x - nodes[j]), j < i
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
    if (i + 1 < n) {
      basis.push_back(Rational(0));
      for (size_t j = basis.size() - 1; j > 0; --j)
        basis[j] = basis[j - 1] - nodes[i] * basis[j];
      basis[0] = -nodes[i] * basis[0];
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace ehrhart
