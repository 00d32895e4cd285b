#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tristring {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

/// Natural logarithm of a strictly positive integer, accurate to double precision
/// for values far beyond the double range.
double log_of(const BigInt& value);

/// Nearest double, or +inf if the value exceeds the double range.
double to_double(const BigInt& value);

}  // namespace tristring
