#include "cantor/bignum.hpp"

#include "cantor/error.hpp"

#include "cantor/numeric.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

namespace cantor {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt ipow(std::int64_t base, std::uint64_t exp) { return ipow(BigInt(base), exp); }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view p = text.substr(0, slash);
    std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(p) || !is_integer_literal(q))
        throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    BigInt pn(std::string(p[0] == '+' ? p.substr(1) : p));
    BigInt qn(std::string(q[0] == '+' ? q.substr(1) : q));
    if (qn == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(pn, qn);
}

std::string format_real(const Real& v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::string to_decimal(const Rational& r, int digits) {
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    return format_real(to_real(r), digits);
}

}  // namespace cantor
