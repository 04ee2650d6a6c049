#pragma once

// High-precision presentation helpers. Every decision in the engine is made on
// exact integers or rationals; these values are for rendering (and for the
// sign of log-form differences that exact arithmetic cannot settle).

#include "cantor/bignum.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace cantor {

using Real = boost::multiprecision::mpfr_float;

/// Sets the MPFR default precision (decimal digits) for the current scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const BigInt& v) { return Real(v.str()); }
inline Real to_real(const Rational& r) { return to_real(num(r)) / to_real(den(r)); }

/// `digits` significant digits, std::ostream general format.
std::string format_real(const Real& v, int digits);

}  // namespace cantor
