#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nhr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", integers, and finite decimals such as "0.25" (parsed exactly).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Smallest integer >= q.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace nhr
