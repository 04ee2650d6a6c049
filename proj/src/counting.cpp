#include "cantor/counting.hpp"

#include "cantor/error.hpp"

#include <map>

namespace cantor {

namespace {

// (mu^p / P^k) as an exact rational.
Rational normalized_term(const BigInt& mu, std::size_t p, const BigInt& P, std::size_t k) {
    return Rational(ipow(mu, p), ipow(P, k));
}

void check_base(const DigitSet& ds, int base) {
    if (base != ds.base())
        throw Error(ErrorCode::ParseError,
                    "expansion base " + std::to_string(base) + " differs from n=" + std::to_string(ds.base()));
}

// r_k = n^k (t - trunc_k t), so t - trunc_k t = r_k / n^k and r_k is in [0, 1].
class Remainders {
public:
    Remainders(const NaryExpansion& t) : n_(t.base()), r_(rational_from_expansion(t)) {}
    const Rational& current() const { return r_; }
    void advance(int digit) { r_ = r_ * n_ - digit; }

private:
    int n_;
    Rational r_;
};

std::optional<Rational> scaled_length(CaseState s, const Rational& r) {
    if (r == 0) return std::nullopt;
    if (s == CaseState::Interval) return 1 - r;
    if (s == CaseState::Potential) return r;
    return std::nullopt;
}

CountingProfile profile_from_trace(const SigmaTrace& trace) {
    CountingProfile out;
    out.horizon_limited = trace.horizon_limited;
    out.records.reserve(trace.states.size());
    BigInt mu = 1;
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        if (trace.states[k] == CaseState::Simultaneous)
            throw Error(ErrorCode::SimultaneousStateEncountered,
                        "sigma = i at level " + std::to_string(k) + "; formula-mode counting is undefined there", k);
        const int factor = k == 0 ? 1 : *trace.factors[k];
        mu *= factor;
        out.records.push_back({trace.digits[k], trace.states[k], factor, mu, std::nullopt});
    }
    return out;
}

NaryExpansion padded(const NaryExpansion& t) {
    if (!t.is_finite()) return t;
    return NaryExpansion(t.base(), t.preperiod(), {0});
}

}  // namespace

CountingProfile mu_profile(const NaryExpansion& t, std::size_t K, const DigitSet& ds) {
    check_base(ds, t.base());
    CountingProfile out = profile_from_trace(sigma_sequence(t, K, ds));
    Remainders rem(t);
    BigInt nk = 1;
    for (std::size_t k = 0; k <= K; ++k) {
        if (k > 0) {
            rem.advance(t.digit(k));
            nk *= ds.base();
        }
        if (auto c = scaled_length(out.records[k].state, rem.current())) out.records[k].ell = *c / nk;
    }
    return out;
}

CountingProfile mu_profile(const DigitStream& t, std::size_t K, const DigitSet& ds) {
    return profile_from_trace(sigma_sequence(t, K, ds));
}

NuValue nu(const CountingProfile& profile, std::size_t k, int m, int precision) {
    if (k > profile.horizon()) throw Error(ErrorCode::OutOfRange, "level beyond the profile horizon");
    NuValue out;
    out.mu = profile.records[k].mu;
    if (out.mu == 0) {
        out.minus_infinity = true;
        out.numeric = "-inf";
        return out;
    }
    out.exact = LogExponent(m, out.mu);
    PrecisionScope scope(static_cast<unsigned>(precision) + 20);
    out.numeric = format_real(out.exact->value(), precision);
    return out;
}

Rational ell(const NaryExpansion& t, std::size_t k, const DigitSet& ds, CaseState sigma) {
    check_base(ds, t.base());
    if (sigma != CaseState::Interval && sigma != CaseState::Potential)
        throw Error(ErrorCode::StateNotCounted, "ell_k needs sigma = +-1", k);
    const BigInt nk = ipow(ds.base(), k);
    const Rational gap = rational_from_expansion(t) - truncate(t, k);
    if (gap == 0) throw Error(ErrorCode::StateNotCounted, "t = trunc_k(t): ell needs an infinite representation", k);
    return sigma == CaseState::Interval ? Rational(1, nk) - gap : gap;
}

CycleInfo cycle_analysis(const NaryExpansion& t_in, const DigitSet& ds) {
    check_base(ds, t_in.base());
    const NaryExpansion t = padded(t_in);
    const std::size_t a = t.preperiod().size();
    const std::size_t q = t.period().size();

    CycleInfo out;
    std::map<std::pair<int, std::size_t>, std::size_t> seen;
    std::vector<CaseState> states{CaseState::Interval};
    std::vector<BigInt> mu{1};
    for (std::size_t k = 0;; ++k) {
        const CaseState s = states[k];
        if (s == CaseState::Simultaneous)
            throw Error(ErrorCode::SimultaneousStateEncountered, "sigma = i at level " + std::to_string(k), k);
        if (s == CaseState::Irrecoverable) {
            out.dead = true;
            out.dead_level = k;
            out.k0 = k;
            out.p = 1;
            out.P = 0;
            return out;
        }
        if (k >= a) {
            auto [it, fresh] = seen.emplace(std::pair{static_cast<int>(s), (k - a) % q}, k);
            if (!fresh) {
                out.k0 = it->second;
                out.p = k - it->second;
                break;
            }
        }
        const int h = t.digit(k + 1);
        mu.push_back(mu[k] * branch_counts(s, h, ds).total());
        states.push_back(sigma_step(s, h, ds));
    }
    out.P = mu[out.k0 + out.p] / mu[out.k0];

    Remainders rem(t_in);
    for (std::size_t k = 0; k < out.k0 + out.p; ++k) {
        if (k >= out.k0) {
            out.witnesses.emplace_back(k, mu[k]);
            out.scaled_ell.push_back(t_in.is_finite() ? std::nullopt : scaled_length(states[k], rem.current()));
        }
        rem.advance(t.digit(k + 1));
    }
    return out;
}

LogExponent beta(const NaryExpansion& t, const DigitSet& ds) {
    if (t.is_finite()) throw Error(ErrorCode::FiniteRepresentation, "beta is defined here for infinite t only");
    const CycleInfo c = cycle_analysis(t, ds);
    if (c.dead) throw Error(ErrorCode::DeadCycle, "mu_t dies at level " + std::to_string(*c.dead_level), c.dead_level);
    return LogExponent(ipow(ds.size(), c.p), c.P);
}

LogExponent dimension_exponent(const CycleInfo& cycle, const DigitSet& ds) {
    if (cycle.dead) throw Error(ErrorCode::DeadCycle, "no dimension for an empty intersection");
    return LogExponent(ipow(ds.base(), cycle.p), cycle.P);
}

LiminfResult L_liminf(const CycleInfo& c) {
    if (c.dead) return {ExactLogValue::zero(), *c.dead_level};
    std::optional<Rational> best;
    std::size_t arg = 0;
    for (const auto& [k, mu] : c.witnesses) {
        Rational term = normalized_term(mu, c.p, c.P, k);
        if (!best || term < *best) {
            best = term;
            arg = k;
        }
    }
    return {ExactLogValue::radical(*best, c.p), arg};
}

LiminfResult L_liminf(const NaryExpansion& t, const DigitSet& ds) {
    if (t.is_finite()) throw Error(ErrorCode::FiniteRepresentation, "L_t is defined here for infinite t only");
    return L_liminf(cycle_analysis(t, ds));
}

LiminfResult L_tilde(const CycleInfo& c, const DigitSet& ds) {
    if (c.dead) return {ExactLogValue::zero(), *c.dead_level};
    const LogExponent s(ipow(ds.base(), c.p), c.P);
    std::optional<ExactLogValue> best;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        const auto& [k, mu] = c.witnesses[i];
        if (!c.scaled_ell[i])
            throw Error(ErrorCode::FiniteRepresentation, "L~ needs an infinite representation of t");
        const Rational R = normalized_term(mu, c.p, c.P, k);
        ExactLogValue term = *c.scaled_ell[i] == 0 ? ExactLogValue::zero()
                                                   : ExactLogValue::with_exponent(R, c.p, *c.scaled_ell[i], s);
        if (!best || compare(term, *best) < 0) {
            best = term;
            arg = k;
        }
    }
    return {*best, arg};
}

LiminfResult L_tilde(const NaryExpansion& t, const DigitSet& ds) {
    if (t.is_finite()) throw Error(ErrorCode::FiniteRepresentation, "L~ is defined here for infinite t only");
    return L_tilde(cycle_analysis(t, ds), ds);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Trend t) {
    switch (t) {
        case Trend::TowardZero: return "toward_zero";
        case Trend::TowardInfinity: return "toward_infinity";
        case Trend::Stable: return "stable";
    }
    return "?";
}

HorizonEstimate horizon_estimate(const CountingProfile& profile, const DigitSet& ds, std::optional<BetaRef> reference) {
    HorizonEstimate out;
    out.K = profile.horizon();
    const auto& rec = profile.records;
    const std::size_t K = out.K;
    if (K == 0) throw Error(ErrorCode::OutOfRange, "horizon estimate needs K >= 1");
    if (rec[K].mu == 0) {
        out.dead = true;
        return out;
    }
    const std::size_t lo = std::max<std::size_t>(1, K / 2);

    // min of mu(k)^(1/k): mu(i)^j < mu(j)^i.
    std::size_t kb = lo;
    for (std::size_t k = lo + 1; k <= K; ++k)
        if (ipow(rec[k].mu, kb) < ipow(rec[kb].mu, k)) kb = k;
    out.beta_argmin = kb;
    out.beta = LogExponent(ipow(ds.size(), kb), rec[kb].mu);

    const BetaRef ref = reference ? *reference : BetaRef{rec[kb].mu, kb};
    auto window_min = [&](std::size_t from, std::size_t to, std::size_t& arg) {
        std::optional<Rational> best;
        for (std::size_t k = from; k <= to; ++k) {
            Rational term = normalized_term(rec[k].mu, ref.p, ref.P, k);
            if (!best || term < *best) {
                best = term;
                arg = k;
            }
        }
        return *best;
    };
    std::size_t arg = lo;
    const Rational late = window_min(lo, K, arg);
    out.L = ExactLogValue::radical(late, ref.p);
    out.L_argmin = arg;
    if (K / 4 < lo && K >= 4) {
        std::size_t early_arg = 0;
        const Rational early = window_min(std::max<std::size_t>(1, K / 4), lo - 1, early_arg);
        out.trend = late < early ? Trend::TowardZero : late > early ? Trend::TowardInfinity : Trend::Stable;
    }
    return out;
}

// ---------------------------------------------------------------------------

bool EditedStream::is_edit(std::size_t k) const {
    if (k < b + a || a == 0) return false;
    const std::size_t rest = k - b;
    if (rest % a != 0) return false;
    const BigInt j2 = rest / a;
    const BigInt j = iroot(j2, 2);
    return j * j == j2 && j >= 1;
}

int EditedStream::operator()(std::size_t k) const { return is_edit(k) ? digit : base.digit(k); }

std::string_view to_string(EditVerdict v) {
    switch (v) {
        case EditVerdict::MeasureZero: return "measure_zero";
        case EditVerdict::MeasureInfinite: return "measure_infinite";
        case EditVerdict::Bounded: return "bounded";
        case EditVerdict::Dead: return "dead";
        case EditVerdict::StateChanged: return "state_changed";
    }
    return "?";
}

EditAnalysis analyze_edits(const EditedStream& s, const DigitSet& ds) {
    if (s.a == 0) throw Error(ErrorCode::BadBand, "edit rule needs a >= 1");
    if (s.digit < 0 || s.digit >= ds.base()) throw Error(ErrorCode::DigitOutOfRange, "edit digit out of range");
    if (s.base.is_finite()) throw Error(ErrorCode::FiniteRepresentation, "edited stream needs a periodic base");
    EditAnalysis out;
    out.base_cycle = cycle_analysis(s.base, ds);
    const CycleInfo& c = out.base_cycle;
    if (c.dead) {
        out.verdict = EditVerdict::Dead;
        return out;
    }
    const SigmaTrace trace = sigma_sequence(s.base, c.k0 + c.p, ds);
    // sigma(k) for any k, by periodicity after k0.
    auto state_at = [&](std::size_t k) {
        if (k >= c.k0) k = c.k0 + (k - c.k0) % c.p;
        return trace.states[k];
    };

    // Effect of one edit at position k: nullopt if sigma changes or dies.
    auto edit_ratio = [&](std::size_t k) -> std::optional<Rational> {
        const CaseState before = state_at(k - 1);
        const int orig = s.base.digit(k);
        if (sigma_step(before, s.digit, ds) != sigma_step(before, orig, ds)) return std::nullopt;
        const int f = branch_counts(before, orig, ds).total();
        const int g = branch_counts(before, s.digit, ds).total();
        return Rational(g, f);
    };

    // Edits with position - 1 < k0 are checked one by one; later ones depend
    // only on j mod p.
    std::uint64_t j = 1;
    for (; s.a * j * j + s.b - 1 < c.k0; ++j) {
        const auto r = edit_ratio(s.a * j * j + s.b);
        if (!r) {
            out.verdict = EditVerdict::StateChanged;
            return out;
        }
        if (*r == 0) {
            out.verdict = EditVerdict::Dead;
            return out;
        }
    }
    out.j_period = c.p;
    for (std::uint64_t i = 0; i < c.p; ++i, ++j) {
        const auto r = edit_ratio(s.a * j * j + s.b);
        if (!r) {
            out.verdict = EditVerdict::StateChanged;
            return out;
        }
        if (*r == 0) {
            out.verdict = EditVerdict::Dead;
            return out;
        }
        out.ratio_per_period *= *r;
    }
    out.verdict = out.ratio_per_period < 1   ? EditVerdict::MeasureZero
                  : out.ratio_per_period > 1 ? EditVerdict::MeasureInfinite
                                             : EditVerdict::Bounded;
    return out;
}

}  // namespace cantor
