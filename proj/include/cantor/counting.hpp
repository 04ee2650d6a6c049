#pragma once

// Counting functions mu_t(k), nu_t(k) = log_m mu_t(k), intersection lengths
// ell_k, and the liminf quantities beta_t, L_t and L~_t. Eventually periodic t
// is handled exactly by cycle analysis; other streams by an explicit horizon.

#include "cantor/exact_log.hpp"
#include "cantor/transition.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

struct CountRecord {
    int digit = 0;  // t_k (0 at k = 0)
    CaseState state = CaseState::Interval;
    int factor = 1;  // mu(k) / mu(k-1); 1 at k = 0
    BigInt mu = 1;
    std::optional<Rational> ell;  // present when sigma(k) = +-1 and t is exact and infinite
};

struct CountingProfile {
    std::vector<CountRecord> records;  // k = 0..K
    bool horizon_limited = false;

    std::size_t horizon() const noexcept { return records.size() - 1; }
};

/// Throws SimultaneousStateEncountered at the first level with sigma = i.
CountingProfile mu_profile(const NaryExpansion& t, std::size_t K, const DigitSet& ds);
CountingProfile mu_profile(const DigitStream& t, std::size_t K, const DigitSet& ds);

struct NuValue {
    BigInt mu;
    bool minus_infinity = false;  // mu = 0
    std::optional<LogExponent> exact;  // log_m(mu)
    std::string numeric;
};

NuValue nu(const CountingProfile& profile, std::size_t k, int m, int precision = 50);

/// ell_k: n^-k - (t - trunc_k t) when sigma = 1, t - trunc_k t when sigma = -1.
Rational ell(const NaryExpansion& t, std::size_t k, const DigitSet& ds, CaseState sigma);

struct CycleInfo {
    std::size_t k0 = 0;  // first level whose (sigma, period position) key repeats
    std::size_t p = 0;   // cycle length
    BigInt P = 1;        // product of factors over one cycle
    bool dead = false;   // sigma reaches 0
    std::optional<std::size_t> dead_level;
    /// (k, mu(k)) for k0 <= k < k0 + p.
    std::vector<std::pair<std::size_t, BigInt>> witnesses;
    /// ell_k * n^k for the same levels (absent for finite t).
    std::vector<std::optional<Rational>> scaled_ell;
};

/// Finite t is read with period [0].
CycleInfo cycle_analysis(const NaryExpansion& t, const DigitSet& ds);

/// beta = log_m(P) / p = log_{m^p}(P).
LogExponent beta(const NaryExpansion& t, const DigitSet& ds);
/// s = beta * log_n(m) = log_{n^p}(P).
LogExponent dimension_exponent(const CycleInfo& cycle, const DigitSet& ds);

struct LiminfResult {
    ExactLogValue value = ExactLogValue::zero();
    std::size_t argmin_k = 0;  // level k* attaining the minimum in the cycle
};

/// L = min over one cycle of (mu(k)^p / P^k)^(1/p). Zero for a dead profile.
LiminfResult L_liminf(const CycleInfo& cycle);
LiminfResult L_liminf(const NaryExpansion& t, const DigitSet& ds);

/// L~ = min over one cycle of (mu(k)^p / P^k)^(1/p) * (ell_k n^k)^s.
LiminfResult L_tilde(const CycleInfo& cycle, const DigitSet& ds);
LiminfResult L_tilde(const NaryExpansion& t, const DigitSet& ds);

/// Reference exponent as the pair (P, p) meaning m^(p beta) = P.
struct BetaRef {
    BigInt P;
    std::size_t p;
};

enum class Trend { TowardZero, TowardInfinity, Stable };
std::string_view to_string(Trend t);

struct HorizonEstimate {
    std::size_t K = 0;
    LogExponent beta{2, 1};  // log_{m^k*}(mu(k*)) at the minimising k*
    std::size_t beta_argmin = 0;
    std::optional<ExactLogValue> L;  // needs a reference or the estimated beta
    std::size_t L_argmin = 0;
    Trend trend = Trend::Stable;
    bool dead = false;
    bool horizon_limited = true;
};

/// Running minima over [K/2, K]. With `reference` the L estimate and the trend
/// use that exponent; otherwise the estimated beta.
HorizonEstimate horizon_estimate(const CountingProfile& profile, const DigitSet& ds,
                                 std::optional<BetaRef> reference = std::nullopt);

/// A periodic translation with digit `digit` forced at positions a*j^2 + b, j >= 1.
struct EditedStream {
    NaryExpansion base;
    std::uint64_t a = 2;
    std::uint64_t b = 0;
    int digit = 0;

    int operator()(std::size_t k) const;
    bool is_edit(std::size_t k) const;
};

enum class EditVerdict { MeasureZero, MeasureInfinite, Bounded, Dead, StateChanged };
std::string_view to_string(EditVerdict v);

struct EditAnalysis {
    CycleInfo base_cycle;
    EditVerdict verdict = EditVerdict::Bounded;
    /// Product over one residue period of j of edited/original factors.
    Rational ratio_per_period{1};
    std::size_t j_period = 0;
};

/// Closed-form effect of the edits: sigma must be unchanged at every edit;
/// the factor ratios then decide L = 0 or L = infinity.
EditAnalysis analyze_edits(const EditedStream& s, const DigitSet& ds);

}  // namespace cantor
