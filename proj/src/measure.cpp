#include "cantor/measure.hpp"

#include "cantor/error.hpp"

#include <algorithm>
#include <map>

namespace cantor {

namespace {

void check_base(const DigitSet& ds, int base) {
    if (base != ds.base())
        throw Error(ErrorCode::ParseError,
                    "expansion base " + std::to_string(base) + " differs from n=" + std::to_string(ds.base()));
}

MeasureReport blank(const DigitSet& ds, MeasureRoute route) {
    MeasureReport r;
    r.n = ds.base();
    r.m = ds.size();
    r.route = route;
    return r;
}

void mark_empty(MeasureReport& r) {
    r.kind = MeasureKind::Empty;
    r.set_empty = true;
    r.lower = r.upper = ExactLogValue::zero();
    r.lower_source = r.upper_source = "empty_set";
}

bool is_one(const NaryExpansion& t) {
    return t.preperiod().empty() && t.period() == std::vector<int>{t.base() - 1};
}

BigInt shift_of(const DigitStream& t, int n, std::size_t k) {
    BigInt h = 0;
    for (std::size_t j = 1; j <= k; ++j) h = h * n + t(j);
    return h;
}

// Interval and potential counts per level, with an interval-only exponent
// estimate: the potential cases of a simultaneous state need not carry points.
MeasureReport oracle_only(const DigitStream& t, const DigitSet& ds, const MeasureOptions& opts) {
    MeasureReport r = blank(ds, MeasureRoute::OracleOnly);
    r.kind = MeasureKind::Unknown;
    r.horizon_limited = true;
    std::size_t K = 0;
    BigInt size = 1;
    while (K < opts.K && size * ds.size() <= opts.cap) {
        size *= ds.size();
        ++K;
    }
    for (std::size_t k = 0; k <= K; ++k)
        r.oracle_levels.push_back({k, oracle_counts_shift(ds, k, shift_of(t, ds.base(), k), opts.oracle())});
    std::optional<std::size_t> best;
    for (std::size_t k = std::max<std::size_t>(1, K / 2); k <= K && K > 0; ++k) {
        const BigInt I = r.oracle_levels[k].counts.interval;
        if (I == 0) {
            best.reset();
            break;
        }
        if (!best || ipow(I, *best) < ipow(BigInt(r.oracle_levels[*best].counts.interval), k)) best = k;
    }
    if (best) {
        const BigInt I = r.oracle_levels[*best].counts.interval;
        r.beta = LogExponent(ipow(ds.size(), *best), I);
        r.s = LogExponent(ipow(ds.base(), *best), I);
    }
    return r;
}

void fill_periodic(MeasureReport& r, const CycleInfo& c, const DigitSet& ds) {
    r.cycle = c;
    r.beta = LogExponent(ipow(ds.size(), c.p), c.P);
    r.s = dimension_exponent(c, ds);
    r.L = L_liminf(c);
    r.L_tilde = L_tilde(c, ds);
    const BigInt& mu = c.witnesses[r.L->argmin_k - c.k0].second;
    const Rational R(ipow(mu, c.p), ipow(c.P, r.L->argmin_k));
    r.lower = ExactLogValue::radical(R / c.P, c.p);
    r.lower_source = "m^-beta*L";
    if (compare(r.L_tilde->value, r.L->value) <= 0) {
        r.upper = r.L_tilde->value;
        r.upper_source = "L_tilde";
    } else {
        r.upper = r.L->value;
        r.upper_source = "L";
    }
    r.upper_not_tight = true;
}

MeasureReport from_horizon(const CountingProfile& prof, const DigitSet& ds, std::optional<BetaRef> ref,
                           MeasureRoute route) {
    MeasureReport r = blank(ds, route);
    r.kind = MeasureKind::Unknown;
    r.horizon_limited = true;
    r.membership_unknown = true;
    r.horizon = horizon_estimate(prof, ds, ref);
    if (r.horizon->dead) return r;
    r.beta = r.horizon->beta;
    const std::size_t kb = r.horizon->beta_argmin;
    r.s = LogExponent(ipow(ds.base(), kb), prof.records[kb].mu);
    return r;
}

}  // namespace

std::string_view to_string(MeasureRoute r) {
    switch (r) {
        case MeasureRoute::Periodic: return "periodic";
        case MeasureRoute::FiniteTranslation: return "finite_t";
        case MeasureRoute::WholeSet: return "whole_set";
        case MeasureRoute::UnitTranslation: return "unit_t";
        case MeasureRoute::EditedStream: return "edited_stream";
        case MeasureRoute::Horizon: return "horizon";
        case MeasureRoute::OracleOnly: return "oracle_only";
    }
    return "?";
}

std::string_view to_string(MeasureKind k) {
    switch (k) {
        case MeasureKind::Bounds: return "bounds";
        case MeasureKind::ExactZero: return "exact_zero";
        case MeasureKind::ExactInfinite: return "exact_infinite";
        case MeasureKind::PointCount: return "point_count";
        case MeasureKind::Empty: return "empty";
        case MeasureKind::Unknown: return "unknown";
    }
    return "?";
}

MeasureReport measure_bounds_C(const DigitSet& ds) {
    MeasureReport r = blank(ds, MeasureRoute::WholeSet);
    r.s = LogExponent(ds.base(), ds.size());
    r.lower = ExactLogValue::rational(Rational(1, ds.size()));
    r.upper = ExactLogValue::rational(1);
    r.lower_source = "whole_set_lower";
    r.upper_source = "whole_set_upper";
    r.level = 0;
    r.copies = 1;
    return r;
}

MeasureReport measure_bounds_finite_t(const DigitSet& ds, const NaryExpansion& t, const MeasureOptions& opts) {
    check_base(ds, t.base());
    if (!t.is_finite()) throw Error(ErrorCode::NotFinite, "t = " + t.to_string() + " does not terminate");
    if (t.is_zero()) return measure_bounds_C(ds);

    const std::size_t k = t.preperiod().size();
    BigInt a, points = 0;
    if (ds.delta().sparse) {
        a = interval_case_count(ds, t, k);
        if (a == 0) points = b_count_sparse(ds, t, k, opts.oracle());
    } else {
        const auto dec = finite_decomposition(ds, t, k, opts.oracle());
        a = dec.a_offsets.size();
        points = dec.b_points.size();
    }

    MeasureReport r = blank(ds, MeasureRoute::FiniteTranslation);
    r.level = k;
    r.copies = a;
    if (a > 0) {
        const BigInt mk = ipow(ds.size(), k);
        r.s = LogExponent(ds.base(), ds.size());
        r.lower = ExactLogValue::rational(Rational(a, mk * ds.size()));
        r.upper = ExactLogValue::rational(Rational(a, mk));
        r.lower_source = "copies_lower";
        r.upper_source = "copies_upper";
    } else if (points > 0) {
        r.kind = MeasureKind::PointCount;
        r.s = LogExponent(ds.base(), 1);
        r.point_count = points;
        r.lower = r.upper = ExactLogValue::rational(Rational(points));
        r.lower_source = r.upper_source = "point_count";
    } else {
        mark_empty(r);
    }
    return r;
}

MeasureReport measure_bounds(const NaryExpansion& t, const DigitSet& ds, const MeasureOptions& opts) {
    check_base(ds, t.base());
    if (t.is_finite()) return measure_bounds_finite_t(ds, t, opts);
    if (is_one(t)) {
        // C ∩ (C + 1) = {1} exactly when 1 is in C.
        MeasureReport r = blank(ds, MeasureRoute::UnitTranslation);
        if (ds.largest() != ds.base() - 1) {
            mark_empty(r);
            return r;
        }
        r.kind = MeasureKind::PointCount;
        r.s = LogExponent(ds.base(), 1);
        r.point_count = 1;
        r.lower = r.upper = ExactLogValue::rational(1);
        r.lower_source = r.upper_source = "point_count";
        return r;
    }
    if (!ds.delta().sparse) return oracle_only([&](std::size_t k) { return t.digit(k); }, ds, opts);

    MeasureReport r = blank(ds, MeasureRoute::Periodic);
    const CycleInfo c = cycle_analysis(t, ds);
    if (c.dead) {
        r.cycle = c;
        mark_empty(r);
        return r;
    }
    fill_periodic(r, c, ds);
    return r;
}

MeasureReport measure_bounds(const EditedStream& t, const DigitSet& ds, const MeasureOptions& opts) {
    check_base(ds, t.base.base());
    if (!ds.delta().sparse) return oracle_only(t, ds, opts);
    const EditAnalysis ea = analyze_edits(t, ds);
    const CycleInfo& c = ea.base_cycle;

    MeasureReport r = blank(ds, MeasureRoute::EditedStream);
    r.edits = ea;
    switch (ea.verdict) {
        case EditVerdict::MeasureZero:
        case EditVerdict::MeasureInfinite: {
            // The edits add o(k) to nu(k), so beta is that of the base stream.
            r.cycle = c;
            r.beta = LogExponent(ipow(ds.size(), c.p), c.P);
            r.s = dimension_exponent(c, ds);
            const bool zero = ea.verdict == EditVerdict::MeasureZero;
            r.kind = zero ? MeasureKind::ExactZero : MeasureKind::ExactInfinite;
            r.L_zero = zero;
            r.L_infinite = !zero;
            const ExactLogValue v = zero ? ExactLogValue::zero() : ExactLogValue::infinity();
            r.L = LiminfResult{v, 0};
            r.lower = r.upper = v;
            r.lower_source = r.upper_source = zero ? "L_zero" : "L_infinite";
            r.horizon = horizon_estimate(mu_profile(t, std::max<std::size_t>(opts.K, 4), ds), ds, BetaRef{c.P, c.p});
            return r;
        }
        case EditVerdict::Dead:
            mark_empty(r);
            return r;
        case EditVerdict::Bounded:
        case EditVerdict::StateChanged: break;
    }
    const auto prof = mu_profile(t, std::max<std::size_t>(opts.K, 4), ds);
    MeasureReport h = from_horizon(prof, ds, c.dead ? std::nullopt : std::optional<BetaRef>(BetaRef{c.P, c.p}),
                                   MeasureRoute::EditedStream);
    h.edits = ea;
    return h;
}

MeasureReport measure_bounds(const DigitStream& t, const DigitSet& ds, const MeasureOptions& opts) {
    if (!ds.delta().sparse) return oracle_only(t, ds, opts);
    const std::size_t K = std::max<std::size_t>(opts.K, 4);
    const auto prof = mu_profile(t, K, ds);
    MeasureReport r = from_horizon(prof, ds, std::nullopt, MeasureRoute::Horizon);
    if (r.horizon->dead && in_F(t, ds, K).verdict == FVerdict::NotInF) {
        mark_empty(r);
        r.membership_unknown = false;
    }
    return r;
}

LogExponent dimension(const NaryExpansion& t, const DigitSet& ds, const MeasureOptions& opts) {
    const MeasureReport r = measure_bounds(t, ds, opts);
    if (r.set_empty) throw Error(ErrorCode::NotInF, "C ∩ (C + t) is empty for t = " + t.to_string());
    if (r.route == MeasureRoute::OracleOnly)
        throw Error(ErrorCode::NonSparse, "dimension formula needs a sparse digit set");
    return *r.s;
}

// ---------------------------------------------------------------------------

std::string_view to_string(FVerdict v) {
    switch (v) {
        case FVerdict::InF: return "IN_F";
        case FVerdict::NotInF: return "NOT_IN_F";
        case FVerdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

FMembership in_F(const NaryExpansion& t, const DigitSet& ds) {
    check_base(ds, t.base());
    // (sigma, period position) repeats within a + 4q levels, so a
    // representation alive that long is alive forever.
    auto run = [&](const NaryExpansion& rep) {
        FMembership out;
        const std::size_t q = std::max<std::size_t>(1, rep.period().size());
        out.K = rep.preperiod().size() + 4 * q + 1;
        out.trace = sigma_sequence(rep, out.K, ds).states;
        for (std::size_t k = 0; k < out.trace.size(); ++k)
            if (out.trace[k] == CaseState::Irrecoverable) {
                out.empty_level = k;
                break;
            }
        out.verdict = out.empty_level ? FVerdict::NotInF : FVerdict::InF;
        return out;
    };
    FMembership first = run(t);
    if (first.verdict == FVerdict::InF || !t.is_finite() || t.is_zero()) return first;
    FMembership twin = run(alternate_representation(t));
    twin.used_twin = true;
    return twin.verdict == FVerdict::InF ? twin : first;
}

FMembership in_F(const DigitStream& t, const DigitSet& ds, std::size_t K) {
    FMembership out;
    out.K = K;
    const SigmaTrace trace = sigma_sequence(t, K, ds);
    out.trace = trace.states;
    for (std::size_t k = 0; k < out.trace.size(); ++k) {
        if (out.trace[k] != CaseState::Irrecoverable) continue;
        out.empty_level = k;
        // t - trunc_k t must be strictly inside (0, n^-k): the tail is neither
        // all 0 nor all n-1 within the horizon.
        bool nonzero = false, not_top = false;
        for (std::size_t j = k + 1; j <= K; ++j) {
            nonzero |= trace.digits[j] != 0;
            not_top |= trace.digits[j] != ds.base() - 1;
        }
        out.verdict = nonzero && not_top ? FVerdict::NotInF : FVerdict::Unknown;
        return out;
    }
    out.verdict = FVerdict::Unknown;
    return out;
}

// ---------------------------------------------------------------------------

CoverExponent::CoverExponent(Rational r) : rational_(std::move(r)) {
    if (*rational_ <= 0) throw Error(ErrorCode::OutOfRange, "cover exponent must be positive");
}

CoverExponent::CoverExponent(LogExponent e) : log_(std::move(e)) {
    if (auto q = log_->rational()) rational_ = *q;
}

Real CoverExponent::value() const { return log_ ? log_->value() : to_real(*rational_); }

std::string CoverExponent::symbolic() const { return log_ ? log_->symbolic() : to_string(*rational_); }

std::optional<Rational> CoverExponent::rational() const { return rational_; }

CoverBound cover_upper_bound(const DigitSet& ds, std::size_t depth, const CoverExponent& s, int precision,
                             const OracleOptions& opts) {
    const LevelSet level = build_level(ds, depth, opts);
    const auto& h = level.offsets;
    const std::size_t M = h.size();
    PrecisionScope scope(static_cast<unsigned>(precision) + 20);
    const Real sv = s.value();
    const Real log_unit = log(to_real(ipow(ds.base(), depth)));
    const Real tolerance = pow(Real(10), -precision);

    std::map<BigInt, Real> cost_of;  // width in units -> (width / n^k)^s
    auto block_cost = [&](const BigInt& w) -> const Real& {
        auto it = cost_of.find(w);
        if (it == cost_of.end()) it = cost_of.emplace(w, exp(sv * (log(to_real(w)) - log_unit))).first;
        return it->second;
    };

    std::vector<Real> best(M + 1);
    std::vector<std::size_t> blocks(M + 1, 0), prev(M + 1, 0);
    best[0] = 0;
    for (std::size_t j = 1; j <= M; ++j) {
        if (opts.cancel && opts.cancel->load()) throw Error(ErrorCode::Cancelled, "cover search cancelled");
        bool have = false;
        for (std::size_t i = 0; i < j; ++i) {
            const Real cand = best[i] + block_cost(h[j - 1] + 1 - h[i]);
            const std::size_t nb = blocks[i] + 1;
            const bool better = !have || cand < best[j] - tolerance ||
                                (abs(cand - best[j]) <= tolerance && nb < blocks[j]);
            if (better) {
                best[j] = cand;
                blocks[j] = nb;
                prev[j] = i;
                have = true;
            }
        }
    }

    CoverBound out;
    out.depth = depth;
    out.s_symbolic = s.symbolic();
    out.cost = best[M];
    out.cost_decimal = format_real(best[M], precision);
    for (std::size_t j = M; j > 0; j = prev[j]) out.blocks.push_back({h[prev[j]], h[j - 1] + 1 - h[prev[j]]});
    std::reverse(out.blocks.begin(), out.blocks.end());
    return out;
}

// ---------------------------------------------------------------------------

DenseApproximant dense_approximant(const DigitSet& ds, const NaryExpansion& t, const Rational& beta, const Rational& y,
                                   const Rational& eps, std::size_t K) {
    check_base(ds, t.base());
    if (!ds.delta().sparse) throw Error(ErrorCode::NonSparse, "the greedy construction needs a sparse digit set");
    if (beta <= 0 || beta >= 1) throw Error(ErrorCode::BadBand, "beta must lie in (0, 1)");
    if (y <= 0) throw Error(ErrorCode::BadBand, "y must be positive");
    if (eps <= 0) throw Error(ErrorCode::BadBand, "epsilon must be positive");

    const int n = ds.base();
    const int m = ds.size();
    const int dm = ds.largest();
    const BigInt bp = num(beta), bq = den(beta);
    const auto q = static_cast<std::uint64_t>(bq);
    const BigInt yq_num = ipow(num(y), q), yq_den = ipow(den(y), q);

    // sign of mu m^(-j beta) - y m^(c / q), compared after raising to the power q.
    auto cmp = [&](const BigInt& mu, std::size_t j, const BigInt& c) {
        const BigInt e = BigInt(j) * bp + c;  // exponent of m on the right, in units of 1/q
        BigInt lhs = ipow(mu, q) * yq_den;
        BigInt rhs = yq_num;
        if (e >= 0) rhs *= ipow(BigInt(m), static_cast<std::uint64_t>(e));
        else lhs *= ipow(BigInt(m), static_cast<std::uint64_t>(BigInt(-e)));
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    };

    // Smallest k with n^-(k-1) < eps.
    std::size_t k = 1;
    while (Rational(1, ipow(n, k - 1)) >= eps) ++k;
    if (K < k) throw Error(ErrorCode::OutOfRange, "horizon K must be at least " + std::to_string(k));

    DenseApproximant out;
    out.copied = k - 1;
    out.reset_level = k;
    CaseState sigma = CaseState::Interval;
    BigInt mu = 1;
    auto push = [&](int d) {
        out.digits.push_back(d);
        mu *= branch_counts(sigma, d, ds).total();
        sigma = sigma_step(sigma, d, ds);
    };
    for (std::size_t j = 1; j < k; ++j) {
        push(t.digit(j));
        if (sigma == CaseState::Irrecoverable)
            throw Error(ErrorCode::NotInF, "t is not in F: sigma reaches 0 at level " + std::to_string(j), j);
    }
    out.reset_digit = sigma == CaseState::Interval ? 0 : n - dm;
    push(out.reset_digit);
    for (std::size_t j = k; j < K; ++j) {
        const bool above = cmp(mu, j, 0) > 0;
        if (above && !out.first_dm) out.first_dm = j + 1;
        push(above ? dm : 0);
    }

    // Independent re-check on the emitted digits.
    const auto digits = out.digits;
    const auto prof = mu_profile([&](std::size_t j) { return digits[j - 1]; }, K, ds);
    out.sigma_certified = std::all_of(prof.records.begin(), prof.records.end(), [](const CountRecord& r) {
        return r.state == CaseState::Interval || r.state == CaseState::Potential;
    });
    out.greedy_certified = out.sigma_certified && prof.records[k].state == CaseState::Interval;
    for (std::size_t j = k; j < K && out.greedy_certified; ++j)
        out.greedy_certified = digits[j] == (cmp(prof.records[j].mu, j, 0) > 0 ? dm : 0);
    if (out.first_dm) {
        out.band_certified = true;
        for (std::size_t j = *out.first_dm; j <= K; ++j)
            out.band_certified = out.band_certified && cmp(prof.records[j].mu, j, -bp) >= 0 &&
                                 cmp(prof.records[j].mu, j, BigInt(q) - bp) <= 0;
    }

    out.prefix_value = 0;
    BigInt nk = 1;
    for (int d : digits) {
        nk *= n;
        out.prefix_value += Rational(d, nk);
    }
    const Rational tv = rational_from_expansion(t);
    const Rational lo = out.prefix_value - tv, hi = out.prefix_value + Rational(1, nk) - tv;
    out.distance_certified = abs(lo) < eps && abs(hi) < eps;

    std::size_t arg = std::max<std::size_t>(1, K / 2);
    Rational best = Rational(ipow(prof.records[arg].mu, q), ipow(BigInt(m), static_cast<std::uint64_t>(BigInt(arg) * bp)));
    for (std::size_t j = arg + 1; j <= K; ++j) {
        Rational v(ipow(prof.records[j].mu, q), ipow(BigInt(m), static_cast<std::uint64_t>(BigInt(j) * bp)));
        if (v < best) {
            best = v;
            arg = j;
        }
    }
    out.liminf_estimate = ExactLogValue::radical(best, q);
    out.liminf_in_band = cmp(prof.records[arg].mu, arg, -bp) >= 0 && cmp(prof.records[arg].mu, arg, 0) <= 0;
    return out;
}

}  // namespace cantor
