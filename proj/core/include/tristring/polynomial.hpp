#pragma once

#include <map>
#include <string>
#include <utility>

#include "tristring/big_integer.hpp"

namespace tristring {

/// Integer polynomial in x and y, keyed by exponent pair (i, j) for x^i y^j.
/// Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial monomial(int x_power, int y_power, const BigInt& c = 1);

  const std::map<Exponents, BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(int x_power, int y_power) const;
  bool is_zero() const { return coefficients_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  /// Multiply by x^i y^j.
  BivariatePolynomial shifted(int x_power, int y_power) const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  /// e.g. "x^2+x+y"; terms by descending x power, then descending y power. "0" when empty.
  std::string to_string() const;

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::map<Exponents, BigInt> coefficients_;
};

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);

}  // namespace tristring
