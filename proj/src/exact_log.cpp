#include "cantor/exact_log.hpp"

#include "cantor/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace cantor {

namespace {

// coef * ln(x) * ln(y), x and y positive rationals.
struct LogTerm {
    BigInt coef;
    Rational x;
    Rational y;
};

std::vector<BigInt> coprime_basis(const std::vector<BigInt>& values) {
    std::vector<BigInt> basis;
    std::vector<BigInt> work;
    for (const BigInt& v : values)
        if (v > 1) work.push_back(v);
    while (!work.empty()) {
        BigInt y = work.back();
        work.pop_back();
        if (y <= 1) continue;
        bool placed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const BigInt g = gcd(y, basis[i]);
            if (g == 1) continue;
            if (g == y && g == basis[i]) {
                placed = true;
                break;
            }
            const BigInt b = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            for (const BigInt& part : {g, BigInt(b / g), BigInt(y / g)})
                if (part > 1) work.push_back(part);
            placed = true;
            break;
        }
        if (!placed) basis.push_back(y);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<BigInt> exponents(BigInt v, const std::vector<BigInt>& basis) {
    std::vector<BigInt> e(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size() && v > 1; ++i)
        while (v % basis[i] == 0) {
            v /= basis[i];
            ++e[i];
        }
    return e;
}

std::vector<BigInt> exponents(const Rational& r, const std::vector<BigInt>& basis) {
    auto a = exponents(num(r), basis);
    auto b = exponents(den(r), basis);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Real ln(const Rational& r) { return log(to_real(num(r))) - log(to_real(den(r))); }

// Symmetrized coefficient matrix of sum coef ln x ln y over a coprime basis.
// A zero matrix proves the form vanishes.
bool provably_zero(const std::vector<LogTerm>& terms) {
    std::vector<BigInt> atoms;
    for (const auto& t : terms)
        for (const Rational* r : {&t.x, &t.y}) {
            atoms.push_back(num(*r));
            atoms.push_back(den(*r));
        }
    const auto basis = coprime_basis(atoms);
    const std::size_t b = basis.size();
    std::vector<BigInt> m(b * b, 0);
    for (const auto& t : terms) {
        const auto ex = exponents(t.x, basis);
        const auto ey = exponents(t.y, basis);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) m[i * b + j] += t.coef * ex[i] * ey[j];
    }
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i; j < b; ++j) {
            const BigInt s = i == j ? m[i * b + i] : m[i * b + j] + m[j * b + i];
            if (s != 0) return false;
        }
    return true;
}

int bilinear_sign(const std::vector<LogTerm>& terms) {
    if (provably_zero(terms)) return 0;
    for (unsigned digits : {80U, 400U, 2000U}) {
        PrecisionScope scope(digits);
        Real total = 0, magnitude = 0;
        for (const auto& t : terms) {
            Real v = to_real(t.coef) * ln(t.x) * ln(t.y);
            total += v;
            magnitude += abs(v);
        }
        const Real tolerance = magnitude * pow(Real(10), -static_cast<int>(digits) + 20);
        if (total > tolerance) return 1;
        if (total < -tolerance) return -1;
    }
    // Indistinguishable at 2000 digits: reported as a tie.
    return 0;
}

Rational rpow(const Rational& r, std::uint64_t e) { return Rational(ipow(num(r), e), ipow(den(r), e)); }

Rational rpow_signed(const Rational& r, const BigInt& e) {
    const auto mag = static_cast<std::uint64_t>(e < 0 ? BigInt(-e) : e);
    const Rational p = rpow(r, mag);
    return e < 0 ? Rational(den(p), num(p)) : p;
}

}  // namespace

BigInt iroot(const BigInt& v, std::uint64_t k) {
    if (v < 0) throw Error(ErrorCode::OutOfRange, "root of a negative integer");
    if (k == 1 || v < 2) return v;
    const std::size_t bits = msb(v) + 1;
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        const BigInt y = ((k - 1) * x + v / ipow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (ipow(x, k) > v) --x;
    while (ipow(x + 1, k) <= v) ++x;
    return x;
}

std::optional<BigInt> exact_root(const BigInt& v, std::uint64_t k) {
    BigInt r = iroot(v, k);
    if (ipow(r, k) == v) return r;
    return std::nullopt;
}

std::pair<BigInt, std::uint64_t> perfect_power(const BigInt& v) {
    if (v < 2) return {v, 1};
    for (std::uint64_t e = msb(v); e >= 2; --e)
        if (auto r = exact_root(v, e)) return {*r, e};
    return {v, 1};
}

// ---------------------------------------------------------------------------

LogExponent::LogExponent(BigInt base, BigInt arg) : base_(std::move(base)), arg_(std::move(arg)) {
    if (base_ < 2) throw Error(ErrorCode::OutOfRange, "log base must be >= 2");
    if (arg_ < 1) throw Error(ErrorCode::OutOfRange, "log argument must be >= 1");
}

std::optional<Rational> LogExponent::rational() const {
    if (arg_ == 1) return Rational(0);
    const auto [gb, eb] = perfect_power(base_);
    const auto [ga, ea] = perfect_power(arg_);
    if (gb != ga) return std::nullopt;
    return Rational(BigInt(ea), BigInt(eb));
}

Real LogExponent::value() const { return log(to_real(arg_)) / log(to_real(base_)); }

std::string LogExponent::symbolic() const {
    if (auto r = rational()) return to_string(*r);
    // log_(g^e)(h^e) = log_g(h) for a common exponent e.
    const auto [gb, eb] = perfect_power(base_);
    const auto [ga, ea] = perfect_power(arg_);
    const std::uint64_t g = std::gcd(eb, ea);
    return "log_" + ipow(gb, eb / g).str() + "(" + ipow(ga, ea / g).str() + ")";
}

int compare(const LogExponent& a, const LogExponent& b) {
    if (a == b) return 0;
    return bilinear_sign({{1, Rational(a.arg()), Rational(b.base())}, {-1, Rational(b.arg()), Rational(a.base())}});
}

// ---------------------------------------------------------------------------

ExactLogValue ExactLogValue::zero() {
    ExactLogValue v;
    v.zero_ = true;
    v.radicand_ = 0;
    return v;
}

ExactLogValue ExactLogValue::infinity() {
    ExactLogValue v;
    v.infinite_ = true;
    return v;
}

ExactLogValue ExactLogValue::rational(const Rational& r) { return radical(r, 1); }

ExactLogValue ExactLogValue::radical(const Rational& radicand, std::uint64_t root) {
    if (radicand < 0 || root == 0) throw Error(ErrorCode::OutOfRange, "radical needs radicand >= 0, root >= 1");
    if (radicand == 0) return zero();
    ExactLogValue v;
    v.radicand_ = radicand;
    v.root_ = root;
    v.normalize();
    return v;
}

ExactLogValue ExactLogValue::with_exponent(const Rational& radicand, std::uint64_t root, const Rational& scale,
                                           const LogExponent& exponent) {
    if (scale <= 0) throw Error(ErrorCode::OutOfRange, "exponent scale must be positive");
    ExactLogValue v = radical(radicand, root);
    if (v.zero_) return v;
    v.scale_ = scale;
    v.exponent_ = exponent;
    v.normalize();
    return v;
}

void ExactLogValue::normalize() {
    if (exponent_ && scale_ == 1) exponent_.reset();
    if (exponent_) {
        if (auto q = exponent_->rational()) {
            // scale^(u/v) folds into the radical: (R^v * scale^(u*root))^(1/(root*v)).
            const auto v = static_cast<std::uint64_t>(den(*q));
            radicand_ = rpow(radicand_, v) * rpow_signed(scale_, num(*q) * root_);
            root_ *= v;
            scale_ = 1;
            exponent_.reset();
        }
    }
    for (std::uint64_t d = root_; d >= 2; --d) {
        if (root_ % d != 0) continue;
        auto a = exact_root(num(radicand_), d);
        auto b = exact_root(den(radicand_), d);
        if (a && b) {
            radicand_ = Rational(*a, *b);
            root_ /= d;
            d = root_ + 1;
        }
    }
    if (radicand_ == 1) root_ = 1;
}

Real ExactLogValue::value() const {
    if (zero_) return Real(0);
    if (infinite_) return std::numeric_limits<Real>::infinity();
    Real out = exp(ln(radicand_) / Real(root_));
    if (exponent_) out *= exp(ln(scale_) * exponent_->value());
    return out;
}

std::string ExactLogValue::decimal(int digits) const {
    if (zero_) return "0";
    if (infinite_) return "inf";
    PrecisionScope scope(static_cast<unsigned>(digits) + 20);
    return format_real(value(), digits);
}

std::string ExactLogValue::symbolic() const {
    if (zero_) return "0";
    if (infinite_) return "inf";
    std::string radical_part;
    if (root_ == 1) radical_part = to_string(radicand_);
    else radical_part = "(" + to_string(radicand_) + ")^(1/" + std::to_string(root_) + ")";
    if (!exponent_) return radical_part;
    const std::string power = "(" + to_string(scale_) + ")^(" + exponent_->symbolic() + ")";
    if (radicand_ == 1) return power;
    return radical_part + " * " + power;
}

std::optional<Rational> ExactLogValue::power_of(const BigInt& base) const {
    if (!is_finite() || exponent_ || base < 2) return std::nullopt;
    auto log_exact = [&](BigInt v) -> std::optional<BigInt> {
        BigInt e = 0;
        while (v > 1 && v % base == 0) {
            v /= base;
            ++e;
        }
        if (v != 1) return std::nullopt;
        return e;
    };
    const auto up = log_exact(num(radicand_));
    const auto down = log_exact(den(radicand_));
    if (!up || !down) return std::nullopt;
    return Rational(*up - *down, BigInt(root_));
}

int compare(const ExactLogValue& a, const ExactLogValue& b) {
    auto rank = [](const ExactLogValue& v) { return v.is_zero() ? 0 : v.is_infinite() ? 2 : 1; };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    if (!a.is_finite()) return 0;

    if (!a.exponent() && !b.exponent()) {
        const Rational lhs = rpow(a.radicand(), b.root());
        const Rational rhs = rpow(b.radicand(), a.root());
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }

    const LogExponent& ea = a.exponent() ? *a.exponent() : *b.exponent();
    const LogExponent& eb = b.exponent() ? *b.exponent() : *a.exponent();
    if (ea.base() == eb.base()) {
        // (ln a - ln b) * lcm * ln(base) as a bilinear log form.
        const std::uint64_t l = std::lcm(a.root(), b.root());
        const Rational base(ea.base());
        std::vector<LogTerm> terms{
            {BigInt(l / a.root()), a.radicand(), base},
            {-BigInt(l / b.root()), b.radicand(), base},
        };
        if (a.exponent()) terms.push_back({BigInt(l), a.scale(), Rational(a.exponent()->arg())});
        if (b.exponent()) terms.push_back({-BigInt(l), b.scale(), Rational(b.exponent()->arg())});
        return bilinear_sign(terms);
    }

    for (unsigned digits : {80U, 400U, 2000U}) {
        PrecisionScope scope(digits);
        const Real va = a.value(), vb = b.value();
        const Real tolerance = (abs(va) + abs(vb)) * pow(Real(10), -static_cast<int>(digits) + 20);
        if (va - vb > tolerance) return 1;
        if (vb - va > tolerance) return -1;
    }
    return 0;
}

}  // namespace cantor
