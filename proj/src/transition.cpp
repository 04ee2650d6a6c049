#include "cantor/transition.hpp"

#include "cantor/error.hpp"

#include <array>

namespace cantor {

namespace {

void check_digit(int digit, const DigitSet& ds) {
    if (digit < 0 || digit >= ds.base())
        throw Error(ErrorCode::DigitOutOfRange,
                    "digit " + std::to_string(digit) + " outside [0, " + std::to_string(ds.base() - 1) + "]");
}

// Gaussian units as (re, im) pairs.
struct Unit {
    int re;
    int im;
};

constexpr Unit unit_of(CaseState s) {
    switch (s) {
        case CaseState::Interval: return {1, 0};
        case CaseState::Potential: return {-1, 0};
        case CaseState::Simultaneous: return {0, 1};
        case CaseState::Irrecoverable: return {0, 0};
    }
    return {0, 0};
}

constexpr Unit unit_of(XiValue v) {
    switch (v) {
        case XiValue::Zero: return {0, 0};
        case XiValue::PlusOne: return {1, 0};
        case XiValue::MinusOne: return {-1, 0};
        case XiValue::PlusI: return {0, 1};
        case XiValue::MinusI: return {0, -1};
    }
    return {0, 0};
}

// -i is the one product outside the state set; it never arises from xi.
constexpr std::optional<CaseState> state_of(Unit u) {
    if (u.re == 1 && u.im == 0) return CaseState::Interval;
    if (u.re == -1 && u.im == 0) return CaseState::Potential;
    if (u.re == 0 && u.im == 1) return CaseState::Simultaneous;
    if (u.re == 0 && u.im == 0) return CaseState::Irrecoverable;
    return std::nullopt;
}

constexpr auto kProduct = [] {
    std::array<std::array<std::optional<CaseState>, 5>, 4> table{};
    for (int s = 0; s < 4; ++s)
        for (int x = 0; x < 5; ++x) {
            Unit a = unit_of(static_cast<CaseState>(s));
            Unit b = unit_of(static_cast<XiValue>(x));
            table[s][x] = state_of({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
        }
    return table;
}();

XiValue pick(bool first, bool second, XiValue only_first, XiValue only_second, XiValue both) {
    if (first && second) return both;
    if (first) return only_first;
    if (second) return only_second;
    return XiValue::Zero;
}

}  // namespace

std::string_view to_string(CaseState s) {
    switch (s) {
        case CaseState::Interval: return "INTERVAL";
        case CaseState::Potential: return "POTENTIAL";
        case CaseState::Simultaneous: return "SIMULTANEOUS";
        case CaseState::Irrecoverable: return "IRRECOVERABLE";
    }
    return "?";
}

std::string_view to_string(XiValue v) {
    switch (v) {
        case XiValue::Zero: return "0";
        case XiValue::PlusOne: return "1";
        case XiValue::MinusOne: return "-1";
        case XiValue::PlusI: return "i";
        case XiValue::MinusI: return "-i";
    }
    return "?";
}

std::string_view sigma_symbol(CaseState s) {
    switch (s) {
        case CaseState::Interval: return "1";
        case CaseState::Potential: return "-1";
        case CaseState::Simultaneous: return "i";
        case CaseState::Irrecoverable: return "0";
    }
    return "?";
}

XiValue xi(CaseState state, int h, const DigitSet& ds) {
    check_digit(h, ds);
    const DeltaSet& delta = ds.delta();
    const int n = ds.base();
    const bool in_d = delta.contains(h);              // h in Delta
    const bool in_d1 = delta.contains(h + 1);         // h in Delta - 1
    const bool in_nd = delta.contains(n - h);         // h in n - Delta
    const bool in_nd1 = delta.contains(n - h - 1);    // h in n - Delta - 1
    switch (state) {
        case CaseState::Interval:
            return pick(in_d, in_d1, XiValue::PlusOne, XiValue::MinusOne, XiValue::PlusI);
        case CaseState::Potential:
            return pick(in_nd, in_nd1, XiValue::MinusOne, XiValue::PlusOne, XiValue::MinusI);
        case CaseState::Simultaneous:
            return pick(in_d || in_nd, in_d1 || in_nd1, XiValue::MinusI, XiValue::PlusI, XiValue::PlusOne);
        case CaseState::Irrecoverable:
            return XiValue::Zero;
    }
    return XiValue::Zero;
}

CaseState sigma_step(CaseState state, int digit, const DigitSet& ds) {
    const XiValue v = xi(state, digit, ds);
    const auto next = kProduct[static_cast<int>(state)][static_cast<int>(v)];
    if (!next) throw Error(ErrorCode::Unsupported, "sigma left {0, 1, -1, i}");
    return *next;
}

BranchCounts branch_counts(CaseState state, int h, const DigitSet& ds) {
    check_digit(h, ds);
    const int n = ds.base();
    switch (state) {
        case CaseState::Interval: return {ds.overlap(h), ds.overlap(h + 1)};
        case CaseState::Potential: return {ds.overlap(n - h), ds.overlap(n - h - 1)};
        default:
            throw Error(ErrorCode::StateNotCounted,
                        std::string("no single-branch count from state ") + std::string(to_string(state)));
    }
}

std::optional<std::size_t> SigmaTrace::first_simultaneous() const {
    for (std::size_t k = 0; k < states.size(); ++k)
        if (states[k] == CaseState::Simultaneous) return k;
    return std::nullopt;
}

SigmaTrace sigma_sequence(const DigitStream& t, std::size_t K, const DigitSet& ds) {
    SigmaTrace trace{ds, {0}, {CaseState::Interval}, {1}, true};
    trace.digits.reserve(K + 1);
    trace.states.reserve(K + 1);
    trace.factors.reserve(K + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        const int h = t(k);
        const CaseState prev = trace.states.back();
        std::optional<int> factor;
        if (prev == CaseState::Interval || prev == CaseState::Potential) factor = branch_counts(prev, h, ds).total();
        else if (prev == CaseState::Irrecoverable) factor = 0;
        trace.digits.push_back(h);
        trace.states.push_back(sigma_step(prev, h, ds));
        trace.factors.push_back(factor);
    }
    return trace;
}

SigmaTrace sigma_sequence(const NaryExpansion& t, std::size_t K, const DigitSet& ds) {
    if (t.base() != ds.base())
        throw Error(ErrorCode::ParseError, "expansion base " + std::to_string(t.base()) + " differs from n=" +
                                               std::to_string(ds.base()));
    SigmaTrace trace = sigma_sequence([&t](std::size_t k) { return t.digit(k); }, K, ds);
    trace.horizon_limited = false;
    return trace;
}

}  // namespace cantor
