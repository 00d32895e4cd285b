#include "tristring/big_integer.hpp"

#include <cmath>
#include <limits>

#include "tristring/error.hpp"

namespace tristring {

std::string to_string(const BigInt& value) { return value.str(); }

double log_of(const BigInt& value) {
  if (value <= 0) throw InvalidArgument("log_of: argument must be positive");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 960) return std::log(value.convert_to<double>());
  // The top two limbs carry more bits than a double holds; the rest is below resolution.
  const auto& backend = value.backend();
  const std::size_t n = backend.size();
  const auto limbs = backend.limbs();
  constexpr int kLimbBits = std::numeric_limits<boost::multiprecision::limb_type>::digits;
  const double top = std::ldexp(static_cast<double>(limbs[n - 1]), kLimbBits) + static_cast<double>(limbs[n - 2]);
  return std::log(top) + static_cast<double>(kLimbBits) * static_cast<double>(n - 2) * std::log(2.0);
}

double to_double(const BigInt& value) {
  if (value != 0 && boost::multiprecision::msb(abs(value)) >= 1023)
    return value < 0 ? -std::numeric_limits<double>::infinity()
                     : std::numeric_limits<double>::infinity();
  return value.convert_to<double>();
}

}  // namespace tristring
