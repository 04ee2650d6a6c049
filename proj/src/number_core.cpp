#include "cantor/number_core.hpp"

#include "cantor/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace cantor {

namespace {

constexpr std::size_t kMaxExpansionDigits = 1'000'000;

DeltaSet build_delta(const std::vector<int>& digits) {
    DeltaSet out;
    std::set<int> diffs;
    for (int a : digits)
        for (int b : digits) diffs.insert(a - b);
    out.values.assign(diffs.begin(), diffs.end());

    out.sparse = true;
    for (std::size_t i = 1; i < out.values.size(); ++i)
        if (out.values[i] - out.values[i - 1] < 2) out.sparse = false;

    int g = 0;
    for (int d : digits) g = std::gcd(g, d);
    out.regular = g >= 2;

    const int gap = digits[1] - digits[0];
    out.uniform = gap >= 2;
    for (std::size_t i = 1; i < digits.size(); ++i)
        if (digits[i] - digits[i - 1] != gap) out.uniform = false;
    return out;
}

void check_digits(int base, const std::vector<int>& ds) {
    if (base < 2) throw Error(ErrorCode::BaseTooSmall, "expansion base must be >= 2");
    for (int d : ds)
        if (d < 0 || d >= base)
            throw Error(ErrorCode::DigitOutOfRange,
                        "digit " + std::to_string(d) + " outside [0, " + std::to_string(base - 1) + "]");
}

// Integer read of a digit block in base n.
BigInt block_value(const std::vector<int>& ds, int base) {
    BigInt v = 0;
    for (int d : ds) v = v * base + d;
    return v;
}

std::vector<int> minimal_period(const std::vector<int>& period) {
    const std::size_t q = period.size();
    for (std::size_t len = 1; len < q; ++len) {
        if (q % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < q && ok; ++i) ok = period[i] == period[i - len];
        if (ok) return {period.begin(), period.begin() + static_cast<std::ptrdiff_t>(len)};
    }
    return period;
}

}  // namespace

bool DeltaSet::contains(int v) const { return std::binary_search(values.begin(), values.end(), v); }

DigitSet::DigitSet(int base, std::vector<int> digits)
    : base_(base), digits_(std::move(digits)), delta_(build_delta(digits_)) {}

bool DigitSet::contains(int d) const { return std::binary_search(digits_.begin(), digits_.end(), d); }

int DigitSet::overlap(int c) const {
    int count = 0;
    for (int d : digits_)
        if (contains(d - c)) ++count;
    return count;
}

std::string DigitSet::to_string() const {
    std::string s = "n=" + std::to_string(base_) + " D={";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(digits_[i]);
    }
    return s + "}";
}

DigitSet make_digit_set(int n, std::vector<int> digits) {
    if (n < 3) throw Error(ErrorCode::BaseTooSmall, "base n must be >= 3, got " + std::to_string(n));
    for (int d : digits)
        if (d < 0 || d >= n)
            throw Error(ErrorCode::DigitOutOfRange,
                        "digit " + std::to_string(d) + " outside [0, " + std::to_string(n - 1) + "]");
    std::sort(digits.begin(), digits.end());
    if (std::adjacent_find(digits.begin(), digits.end()) != digits.end())
        throw Error(ErrorCode::DuplicateDigit, "digit list contains a repeated digit");
    if (digits.empty() || digits.front() != 0)
        throw Error(ErrorCode::FirstDigitNonzero, "smallest digit must be 0");
    if (static_cast<int>(digits.size()) >= n)
        throw Error(ErrorCode::TooManyDigits, "need m < n digits");
    if (digits.size() < 2) throw Error(ErrorCode::TooFewDigits, "need at least two digits");
    return DigitSet(n, std::move(digits));
}

DeltaSet classify(const DigitSet& ds) { return ds.delta(); }

// ---------------------------------------------------------------------------

NaryExpansion::NaryExpansion(int base, std::vector<int> preperiod, std::vector<int> period)
    : base_(base), pre_(std::move(preperiod)), period_(std::move(period)) {
    check_digits(base_, pre_);
    check_digits(base_, period_);
}

bool NaryExpansion::is_canonical() const { return canonical_expansion(base_, pre_, period_) == *this; }

int NaryExpansion::digit(std::size_t k) const {
    if (k == 0) throw Error(ErrorCode::OutOfRange, "digit positions start at 1");
    if (k <= pre_.size()) return pre_[k - 1];
    if (period_.empty()) return 0;
    return period_[(k - 1 - pre_.size()) % period_.size()];
}

std::string NaryExpansion::to_string(bool with_base) const {
    auto group = [this](const std::vector<int>& ds) {
        std::string s;
        if (base_ <= 10) {
            for (int d : ds) s += static_cast<char>('0' + d);
            return s;
        }
        s = "[";
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ds[i]);
        }
        return s + "]";
    };
    std::string s;
    if (is_zero()) {
        s = "0";
    } else {
        s = "0." + (pre_.empty() ? std::string() : group(pre_));
        if (!period_.empty()) s += "(" + group(period_) + ")";
    }
    if (with_base) s += "@" + std::to_string(base_);
    return s;
}

NaryExpansion canonical_expansion(int base, std::vector<int> pre, std::vector<int> period) {
    check_digits(base, pre);
    check_digits(base, period);

    if (!period.empty()) period = minimal_period(period);
    while (!period.empty() && !pre.empty() && pre.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        pre.pop_back();
    }
    if (period.size() == 1 && period[0] == 0) period.clear();
    if (period.size() == 1 && period[0] == base - 1) {
        // 0.x(n-1)(n-1)... = 0.(x+1): carry into the preperiod.
        std::size_t i = pre.size();
        while (i > 0 && pre[i - 1] == base - 1) --i;
        if (i == 0) return NaryExpansion(base, {}, {base - 1});  // the value 1
        pre.resize(i);
        ++pre[i - 1];
        period.clear();
    }
    if (period.empty())
        while (!pre.empty() && pre.back() == 0) pre.pop_back();
    return NaryExpansion(base, std::move(pre), std::move(period));
}

NaryExpansion expansion_from_rational(const Rational& t, int n) {
    if (n < 2) throw Error(ErrorCode::BaseTooSmall, "expansion base must be >= 2");
    if (t < 0 || t > 1) throw Error(ErrorCode::OutOfRange, "t = " + to_string(t) + " outside [0, 1]");
    if (t == 1) return NaryExpansion(n, {}, {n - 1});

    const BigInt q = den(t);
    BigInt r = num(t);
    std::vector<int> digits;
    std::map<BigInt, std::size_t> seen;
    while (r != 0) {
        auto [it, fresh] = seen.emplace(r, digits.size());
        if (!fresh) {
            std::vector<int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            std::vector<int> period(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return canonical_expansion(n, std::move(pre), std::move(period));
        }
        if (digits.size() >= kMaxExpansionDigits)
            throw Error(ErrorCode::PeriodTooLong, "expansion of " + to_string(t) + " exceeds digit budget");
        r *= n;
        digits.push_back(static_cast<int>(r / q));
        r %= q;
    }
    return canonical_expansion(n, std::move(digits), {});
}

Rational rational_from_expansion(const NaryExpansion& e) {
    const int n = e.base();
    const BigInt scale = ipow(n, e.preperiod().size());
    Rational value(block_value(e.preperiod(), n), scale);
    if (!e.period().empty()) {
        const BigInt cycle = ipow(n, e.period().size()) - 1;
        value += Rational(block_value(e.period(), n), scale * cycle);
    }
    return value;
}

BigInt truncation_numerator(const NaryExpansion& e, std::size_t k) {
    BigInt h = 0;
    for (std::size_t j = 1; j <= k; ++j) h = h * e.base() + e.digit(j);
    return h;
}

Rational truncate(const NaryExpansion& e, std::size_t k) {
    return Rational(truncation_numerator(e, k), ipow(e.base(), k));
}

int digit_at(const NaryExpansion& e, std::size_t k) { return e.digit(k); }

NaryExpansion alternate_representation(const NaryExpansion& e) {
    if (!e.is_finite()) throw Error(ErrorCode::NotFinite, "twin exists only for finite representations");
    std::vector<int> pre = e.preperiod();
    while (!pre.empty() && pre.back() == 0) pre.pop_back();
    if (pre.empty()) throw Error(ErrorCode::ZeroHasNoTwin, "0 has a single representation");
    --pre.back();
    return NaryExpansion(e.base(), std::move(pre), {e.base() - 1});
}

// ---------------------------------------------------------------------------

namespace {

class ExpansionParser {
public:
    ExpansionParser(std::string_view text, int n) : s_(text), n_(n) {}

    NaryExpansion parse() {
        std::string_view body = s_;
        int base = n_;
        if (auto at = body.find('@'); at != std::string_view::npos) {
            const std::string tail(body.substr(at + 1));
            if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(c); }))
                fail("bad base suffix");
            base = std::stoi(tail);
            if (n_ > 0 && base != n_) fail("base suffix @" + tail + " disagrees with n=" + std::to_string(n_));
            body = body.substr(0, at);
        }
        if (base < 2) fail("missing base");
        base_ = base;
        s_ = body;
        if (s_ == "0") return NaryExpansion(base, {}, {});
        if (s_ == "1") return expansion_from_rational(Rational(1), base);
        if (s_.substr(0, 2) != "0.") fail("expected leading '0.'");
        pos_ = 2;
        std::vector<int> pre, period;
        if (pos_ < s_.size() && s_[pos_] != '(') pre = group();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            period = group();
            expect(')');
            if (period.empty()) fail("empty period");
        }
        if (pos_ != s_.size()) fail("trailing characters");
        if (pre.empty() && period.empty()) fail("no digits after '0.'");
        return canonical_expansion(base, std::move(pre), std::move(period));
    }

private:
    std::vector<int> group() {
        std::vector<int> out;
        if (pos_ < s_.size() && s_[pos_] == '[') {
            ++pos_;
            while (true) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail("expected digit inside brackets");
                out.push_back(std::stoi(std::string(s_.substr(start, pos_ - start))));
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                expect(']');
                break;
            }
        } else {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                if (base_ > 10) fail("bare digits need n <= 10; use the bracketed form");
                out.push_back(s_[pos_] - '0');
                ++pos_;
            }
        }
        for (int d : out)
            if (d >= base_) fail("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
        return out;
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, "cannot parse expansion '" + std::string(s_) + "': " + why);
    }

    std::string_view s_;
    int n_;
    int base_ = 0;
    std::size_t pos_ = 0;
};

}  // namespace

NaryExpansion parse_translation(std::string_view text, int n) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const bool rational_form =
        text.find('/') != std::string_view::npos || (text.find('.') == std::string_view::npos &&
                                                    text.find('@') == std::string_view::npos && text != "0" &&
                                                    text != "1");
    if (rational_form) {
        if (n < 2) throw Error(ErrorCode::ParseError, "rational t needs a base");
        return expansion_from_rational(parse_rational(text), n);
    }
    return ExpansionParser(text, n).parse();
}

}  // namespace cantor
