#include "tristring/polynomial.hpp"

#include <sstream>

namespace tristring {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int x_power, int y_power, const BigInt& c) {
  BivariatePolynomial p;
  p.add_term({x_power, y_power}, c);
  return p;
}

BigInt BivariatePolynomial::coefficient(int x_power, int y_power) const {
  auto it = coefficients_.find({x_power, y_power});
  return it == coefficients_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coefficients_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.coefficients_) add_term(e, c);
  return *this;
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
  a += b;
  return a;
}

BivariatePolynomial BivariatePolynomial::shifted(int x_power, int y_power) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : coefficients_)
    out.coefficients_.emplace(Exponents{e.first + x_power, e.second + y_power}, c);
  return out;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : coefficients_)
    total += c * boost::multiprecision::pow(x, e.first) * boost::multiprecision::pow(y, e.second);
  return total;
}

std::string BivariatePolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto [i, j] = it->first;
    BigInt c = it->second;
    if (c < 0) {
      out << '-';
      c = -c;
    } else if (!first) {
      out << '+';
    }
    first = false;
    const bool unit = (c == 1) && (i > 0 || j > 0);
    if (!unit) out << c;
    if (i > 0) out << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) out << 'y' << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out.str();
}

}  // namespace tristring
