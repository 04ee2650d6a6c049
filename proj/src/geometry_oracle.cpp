#include "cantor/geometry_oracle.hpp"

#include "cantor/error.hpp"
#include "cantor/transition.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace cantor {

namespace {

using Wide = __int128;

BigInt to_big(Wide v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
}

Wide to_wide(const BigInt& v) {
    const bool neg = v < 0;
    BigInt a = neg ? BigInt(-v) : v;
    const auto lo = static_cast<std::uint64_t>(a & BigInt(~std::uint64_t{0}));
    const auto hi = static_cast<std::uint64_t>(a >> 64);
    Wide out = (static_cast<Wide>(hi) << 64) | static_cast<Wide>(lo);
    return neg ? -out : out;
}

// n^k < 2^120 keeps every offset, shift and sum inside a signed 128-bit word.
bool fits_wide(int n, std::size_t k) { return ipow(n, k) < (BigInt(1) << 120); }

void check_cancel(const OracleOptions& opts) {
    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
        throw Error(ErrorCode::Cancelled, "enumeration cancelled");
}

void check_cap(const DigitSet& ds, std::size_t k, const OracleOptions& opts) {
    if (ipow(ds.size(), k) > opts.cap)
        throw Error(ErrorCode::LevelTooLarge,
                    std::to_string(ds.size()) + "^" + std::to_string(k) + " intervals exceed cap " +
                        std::to_string(opts.cap),
                    k);
}

template <class Int>
std::vector<Int> offsets_of(const DigitSet& ds, std::size_t k, const OracleOptions& opts) {
    std::vector<Int> cur{Int(0)};
    for (std::size_t j = 0; j < k; ++j) {
        check_cancel(opts);
        std::vector<Int> next;
        next.reserve(cur.size() * static_cast<std::size_t>(ds.size()));
        for (const Int& h : cur)
            for (int d : ds.digits()) next.push_back(h * ds.base() + d);
        cur = std::move(next);
    }
    return cur;
}

// Flags for S[lo, hi) against T = S + shift. Both S and T are sorted, so a
// single forward pointer into S serves every h in the range.
template <class Int>
void classify_range(const std::vector<Int>& s, const Int& shift, std::size_t lo, std::size_t hi, CaseFlags* out) {
    if (lo >= hi) return;
    const Int first = s[lo] - 1 - shift;
    std::size_t j = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), first) - s.begin());
    for (std::size_t i = lo; i < hi; ++i) {
        const Int& h = s[i];
        while (j < s.size() && s[j] + shift < h - 1) ++j;
        CaseFlags f;
        for (std::size_t idx = j; idx < s.size() && idx < j + 3; ++idx) {
            const Int v = s[idx] + shift;
            if (v == h - 1) f.potential = true;
            else if (v == h) f.interval = true;
            else if (v == h + 1) f.potentially_empty = true;
            else if (v > h + 1) break;
        }
        f.empty = !(f.interval || f.potential || f.potentially_empty);
        out[i] = f;
    }
}

template <class Int>
std::vector<CaseFlags> classify_all(const std::vector<Int>& s, const Int& shift, const OracleOptions& opts) {
    std::vector<CaseFlags> flags(s.size());
    const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(s.size() / 4096 + 1)));
    if (threads == 1) {
        classify_range(s, shift, 0, s.size(), flags.data());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (s.size() + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(s.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] { classify_range(s, shift, lo, hi, flags.data()); });
        }
        for (auto& th : pool) th.join();
    }
    check_cancel(opts);
    return flags;
}

OracleCounts tally(const std::vector<CaseFlags>& flags) {
    OracleCounts c;
    for (const auto& f : flags) {
        c.interval += f.interval;
        c.potential += f.potential;
        c.potentially_empty += f.potentially_empty;
        c.empty += f.empty;
    }
    return c;
}

template <class Fn>
auto with_offsets(const DigitSet& ds, std::size_t k, const OracleOptions& opts, Fn&& fn) {
    check_cap(ds, k, opts);
    if (fits_wide(ds.base(), k)) return fn(offsets_of<Wide>(ds, k, opts));
    return fn(offsets_of<BigInt>(ds, k, opts));
}

template <class Int>
Int cast_shift(const BigInt& shift) {
    if constexpr (std::is_same_v<Int, Wide>) return to_wide(shift);
    else return shift;
}

template <class Int>
BigInt cast_big(const Int& v) {
    if constexpr (std::is_same_v<Int, Wide>) return to_big(v);
    else return v;
}

void check_base(const DigitSet& ds, const NaryExpansion& t) {
    if (t.base() != ds.base())
        throw Error(ErrorCode::ParseError,
                    "expansion base " + std::to_string(t.base()) + " differs from n=" + std::to_string(ds.base()));
}

// Closed intervals [lo, hi] in integer units, merged where they touch.
std::vector<std::pair<BigInt, BigInt>> merge_runs(const std::vector<BigInt>& starts, const BigInt& width) {
    std::vector<std::pair<BigInt, BigInt>> runs;
    for (const BigInt& a : starts) {
        if (!runs.empty() && runs.back().second >= a) runs.back().second = std::max(runs.back().second, a + width);
        else runs.emplace_back(a, a + width);
    }
    return runs;
}

}  // namespace

LevelSet build_level(const DigitSet& ds, std::size_t k, const OracleOptions& opts) {
    return with_offsets(ds, k, opts, [&](const auto& s) {
        LevelSet ls{ds.base(), k, {}};
        ls.offsets.reserve(s.size());
        for (const auto& h : s) ls.offsets.push_back(cast_big(h));
        return ls;
    });
}

LevelSet refine(const LevelSet& ls, const DigitSet& ds, const OracleOptions& opts) {
    if (ls.base != ds.base()) throw Error(ErrorCode::ParseError, "level set base differs from digit set base");
    if (BigInt(ls.offsets.size()) * ds.size() > opts.cap)
        throw Error(ErrorCode::LevelTooLarge, "refinement exceeds cap " + std::to_string(opts.cap), ls.k + 1);
    LevelSet out{ls.base, ls.k + 1, {}};
    out.offsets.reserve(ls.offsets.size() * static_cast<std::size_t>(ds.size()));
    for (const BigInt& h : ls.offsets)
        for (int d : ds.digits()) out.offsets.push_back(h * ls.base + d);
    std::sort(out.offsets.begin(), out.offsets.end());
    return out;
}

IntervalClassification classify_shift(const DigitSet& ds, std::size_t k, const BigInt& shift,
                                      const OracleOptions& opts) {
    return with_offsets(ds, k, opts, [&](const auto& s) {
        using Int = typename std::decay_t<decltype(s)>::value_type;
        IntervalClassification out{k, shift, {}, classify_all(s, cast_shift<Int>(shift), opts)};
        out.offsets.reserve(s.size());
        for (const auto& h : s) out.offsets.push_back(cast_big(h));
        return out;
    });
}

IntervalClassification classify_intervals(const DigitSet& ds, const NaryExpansion& t, std::size_t k,
                                          const OracleOptions& opts) {
    check_base(ds, t);
    return classify_shift(ds, k, truncation_numerator(t, k), opts);
}

OracleCounts oracle_counts_shift(const DigitSet& ds, std::size_t k, const BigInt& shift, const OracleOptions& opts) {
    return with_offsets(ds, k, opts, [&](const auto& s) {
        using Int = typename std::decay_t<decltype(s)>::value_type;
        return tally(classify_all(s, cast_shift<Int>(shift), opts));
    });
}

OracleCounts oracle_counts(const DigitSet& ds, const NaryExpansion& t, std::size_t k, const OracleOptions& opts) {
    check_base(ds, t);
    return oracle_counts_shift(ds, k, truncation_numerator(t, k), opts);
}

std::vector<RationalInterval> intersect_exact(const DigitSet& ds, const Rational& t, std::size_t k,
                                              const OracleOptions& opts) {
    const LevelSet ls = build_level(ds, k, opts);
    const BigInt q = den(t);
    const BigInt scale = ipow(ds.base(), k) * q;  // common unit 1/(n^k q)
    const BigInt tnum = num(t) * ipow(ds.base(), k);
    std::vector<BigInt> a, b;
    a.reserve(ls.offsets.size());
    b.reserve(ls.offsets.size());
    for (const BigInt& h : ls.offsets) {
        a.push_back(h * q);
        b.push_back(h * q + tnum);
    }
    const auto ra = merge_runs(a, q);
    const auto rb = merge_runs(b, q);

    std::vector<RationalInterval> out;
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        const BigInt lo = std::max(ra[i].first, rb[j].first);
        const BigInt hi = std::min(ra[i].second, rb[j].second);
        if (lo <= hi) out.push_back({Rational(lo, scale), Rational(hi, scale)});
        if (ra[i].second < rb[j].second) ++i;
        else ++j;
    }
    return out;
}

FiniteDecomposition finite_decomposition(const DigitSet& ds, const NaryExpansion& t, std::size_t k,
                                         const OracleOptions& opts) {
    check_base(ds, t);
    const NaryExpansion canon = canonical_expansion(t.base(), t.preperiod(), t.period());
    if (!canon.is_finite()) throw Error(ErrorCode::NotFinite, "t = " + t.to_string() + " does not terminate");
    k = std::max(k, canon.preperiod().size());

    const IntervalClassification cls = classify_intervals(ds, canon, k, opts);
    const BigInt scale = ipow(ds.base(), k);
    FiniteDecomposition out{k, {}, {}};
    std::set<Rational> points;
    const bool touching = ds.largest() == ds.base() - 1;
    for (std::size_t i = 0; i < cls.offsets.size(); ++i) {
        const auto& f = cls.flags[i];
        if (f.interval) out.a_offsets.push_back(cls.offsets[i]);
        if (!touching) continue;
        if (f.potential) points.insert(Rational(cls.offsets[i], scale));
        if (f.potentially_empty) points.insert(Rational(cls.offsets[i] + 1, scale));
    }
    out.b_points.assign(points.begin(), points.end());
    return out;
}

BigInt interval_case_count(const DigitSet& ds, const NaryExpansion& t, std::size_t k) {
    const SigmaTrace trace = sigma_sequence(t, k, ds);
    if (trace.states[k] != CaseState::Interval) return 0;
    BigInt mu = 1;
    for (std::size_t j = 1; j <= k; ++j) mu *= *trace.factors[j];
    return mu;
}

BigInt b_count_sparse(const DigitSet& ds, const NaryExpansion& t, std::size_t k, const OracleOptions& opts) {
    check_base(ds, t);
    if (!ds.delta().sparse) throw Error(ErrorCode::NonSparse, "#B formula needs a sparse digit set");
    const NaryExpansion canon = canonical_expansion(t.base(), t.preperiod(), t.period());
    if (!canon.is_finite()) throw Error(ErrorCode::NotFinite, "t = " + t.to_string() + " does not terminate");
    k = std::max(k, canon.preperiod().size());
    if (!finite_decomposition(ds, canon, k, opts).a_offsets.empty())
        throw Error(ErrorCode::ANotEmpty, "A is nonempty at level " + std::to_string(k), k);
    if (ds.largest() != ds.base() - 1) return 0;

    const Rational value = rational_from_expansion(canon);
    const Rational step(1, ipow(ds.base(), k));
    BigInt total = 0;
    for (const Rational& shifted : {value + step, value - step})
        if (shifted >= 0 && shifted <= 1)
            total += interval_case_count(ds, expansion_from_rational(shifted, ds.base()), k);
    return total;
}

}  // namespace cantor
