#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cantor {

// Expression templates off: values behave like plain value types in generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt ipow(std::int64_t base, std::uint64_t exp);

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Parses "p/q" or an integer literal; throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits (MPFR backed).
std::string to_decimal(const Rational& r, int digits);

}  // namespace cantor
