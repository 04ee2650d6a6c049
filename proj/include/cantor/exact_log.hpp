#pragma once

// Exact symbolic carriers for the liminf exponents and constants:
//   LogExponent    log_base(arg)
//   ExactLogValue  radicand^(1/root) * scale^exponent
// Ordering between values is decided on integers wherever the forms allow it.

#include "cantor/bignum.hpp"
#include "cantor/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cantor {

class LogExponent {
public:
    LogExponent(BigInt base, BigInt arg);

    const BigInt& base() const noexcept { return base_; }
    const BigInt& arg() const noexcept { return arg_; }

    /// Exact value when base and arg are powers of a common integer.
    std::optional<Rational> rational() const;
    Real value() const;
    /// "1/2" when rational, otherwise "log_9(2)".
    std::string symbolic() const;

    bool operator==(const LogExponent&) const = default;

private:
    BigInt base_;
    BigInt arg_;
};

/// log_a(b) vs log_c(d) decided exactly: compares b^(log c) with d^(log a) via
/// the integer identity log_a(b) < log_c(d) <=> ... evaluated on a coprime basis
/// when possible, numerically otherwise.
int compare(const LogExponent& a, const LogExponent& b);

class ExactLogValue {
public:
    static ExactLogValue zero();
    static ExactLogValue infinity();
    static ExactLogValue rational(const Rational& r);
    static ExactLogValue radical(const Rational& radicand, std::uint64_t root);
    static ExactLogValue with_exponent(const Rational& radicand, std::uint64_t root, const Rational& scale,
                                       const LogExponent& exponent);

    bool is_zero() const noexcept { return zero_; }
    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !zero_ && !infinite_; }

    const Rational& radicand() const noexcept { return radicand_; }
    std::uint64_t root() const noexcept { return root_; }
    const Rational& scale() const noexcept { return scale_; }
    const std::optional<LogExponent>& exponent() const noexcept { return exponent_; }

    Real value() const;
    std::string decimal(int digits) const;
    std::string symbolic() const;

    /// r with value == base^r, when the value is a rational power of `base`.
    std::optional<Rational> power_of(const BigInt& base) const;

private:
    ExactLogValue() = default;
    void normalize();

    Rational radicand_{1};
    std::uint64_t root_ = 1;
    Rational scale_{1};
    std::optional<LogExponent> exponent_;
    bool zero_ = false;
    bool infinite_ = false;
};

/// Sign of a - b. Exact for radicals and for equal exponent bases up to a
/// provable tie; other sign decisions use MPFR at escalating precision.
int compare(const ExactLogValue& a, const ExactLogValue& b);

/// Largest integer r with r^k <= v (v >= 0).
BigInt iroot(const BigInt& v, std::uint64_t k);
/// Exact k-th root when v is a perfect k-th power.
std::optional<BigInt> exact_root(const BigInt& v, std::uint64_t k);
/// (b, e) with v = b^e and e maximal, v >= 2.
std::pair<BigInt, std::uint64_t> perfect_power(const BigInt& v);

}  // namespace cantor
