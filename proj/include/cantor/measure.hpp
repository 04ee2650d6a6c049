#pragma once

// Hausdorff-measure bounds and dimension for C ∩ (C + t), bounds for C itself,
// membership of t in F = C - C, optimal block covers of C_k, and the greedy
// construction of translations with a prescribed liminf band.

#include "cantor/counting.hpp"
#include "cantor/geometry_oracle.hpp"

#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

struct MeasureOptions {
    std::size_t K = 64;  // horizon for stream and oracle-only routes
    std::size_t cap = kDefaultCap;
    unsigned threads = 1;
    const std::atomic<bool>* cancel = nullptr;

    OracleOptions oracle() const { return {cap, threads, cancel}; }
};

enum class MeasureRoute { Periodic, FiniteTranslation, WholeSet, UnitTranslation, EditedStream, Horizon, OracleOnly };
std::string_view to_string(MeasureRoute r);

/// What the report states about H^s(C ∩ (C + t)).
enum class MeasureKind {
    Bounds,         // lower <= H^s <= upper
    ExactZero,      // L = 0
    ExactInfinite,  // L = infinity
    PointCount,     // s = 0 and H^0 = point_count
    Empty,          // t not in F
    Unknown,        // horizon-limited or formula mode refused
};
std::string_view to_string(MeasureKind k);

struct OracleLevel {
    std::size_t k = 0;
    OracleCounts counts;
};

struct MeasureReport {
    int n = 0;
    int m = 0;
    MeasureRoute route = MeasureRoute::Periodic;
    MeasureKind kind = MeasureKind::Bounds;

    std::optional<LogExponent> s;     // Hausdorff dimension
    std::optional<LogExponent> beta;  // normalized exponent
    std::optional<CycleInfo> cycle;
    std::optional<LiminfResult> L;
    std::optional<LiminfResult> L_tilde;
    std::optional<ExactLogValue> lower;
    std::optional<ExactLogValue> upper;
    std::string lower_source;
    std::string upper_source;

    std::optional<std::size_t> level;  // finite t: its length k
    std::optional<BigInt> copies;      // finite t: a = #A
    std::optional<BigInt> point_count;

    std::optional<EditAnalysis> edits;
    std::optional<HorizonEstimate> horizon;
    std::vector<OracleLevel> oracle_levels;

    bool set_empty = false;
    bool L_zero = false;
    bool L_infinite = false;
    bool horizon_limited = false;
    bool upper_not_tight = false;  // the true measure can lie strictly below the upper bound
    bool membership_unknown = false;
};

/// Eventually periodic t. Finite t (and t = 1) take the finite path; a
/// non-sparse digit set yields an oracle-only report without formula bounds.
MeasureReport measure_bounds(const NaryExpansion& t, const DigitSet& ds, const MeasureOptions& opts = {});
/// Edited periodic stream, decided in closed form where possible.
MeasureReport measure_bounds(const EditedStream& t, const DigitSet& ds, const MeasureOptions& opts = {});
/// Arbitrary digit stream read to the horizon opts.K.
MeasureReport measure_bounds(const DigitStream& t, const DigitSet& ds, const MeasureOptions& opts = {});

/// [1/m, 1] at s = log_n m.
MeasureReport measure_bounds_C(const DigitSet& ds);
/// Finite t of length k: [a/m^(k+1), a/m^k] when A is nonempty, else H^0 = #B.
MeasureReport measure_bounds_finite_t(const DigitSet& ds, const NaryExpansion& t, const MeasureOptions& opts = {});

/// Hausdorff dimension of C ∩ (C + t). Throws NotInF, NonSparse.
LogExponent dimension(const NaryExpansion& t, const DigitSet& ds, const MeasureOptions& opts = {});

enum class FVerdict { InF, NotInF, Unknown };
std::string_view to_string(FVerdict v);

struct FMembership {
    FVerdict verdict = FVerdict::Unknown;
    std::vector<CaseState> trace;   // sigma trace of the deciding representation
    bool used_twin = false;
    std::optional<std::size_t> empty_level;  // first k with sigma = 0
    std::size_t K = 0;
};

/// Decided by the sigma automaton: a representation whose sigma never
/// reaches 0 gives t in F. Finite t retries the repeating twin.
FMembership in_F(const NaryExpansion& t, const DigitSet& ds);
FMembership in_F(const DigitStream& t, const DigitSet& ds, std::size_t K);

/// Exponent given either as a rational or as log_base(arg).
class CoverExponent {
public:
    CoverExponent(Rational r);
    CoverExponent(LogExponent e);

    Real value() const;
    std::string symbolic() const;
    std::optional<Rational> rational() const;

private:
    std::optional<Rational> rational_;
    std::optional<LogExponent> log_;
};

struct CoverBlock {
    BigInt start;  // first offset, in units of n^-k
    BigInt width;  // in units of n^-k
    bool operator==(const CoverBlock&) const = default;
};

struct CoverBound {
    std::size_t depth = 0;
    std::string s_symbolic;
    Real cost;
    std::string cost_decimal;
    std::vector<CoverBlock> blocks;
};

/// Minimal sum of width^s over covers of C_k by blocks of consecutive
/// intervals. Ties within the working precision go to fewer blocks.
CoverBound cover_upper_bound(const DigitSet& ds, std::size_t depth, const CoverExponent& s, int precision = 50,
                             const OracleOptions& opts = {});

struct DenseApproximant {
    std::vector<int> digits;     // x_1..x_K
    std::size_t copied = 0;      // leading digits taken from t
    std::size_t reset_level = 0; // level whose digit restores sigma = 1
    int reset_digit = 0;
    std::optional<std::size_t> first_dm;  // first greedy d_m choice
    Rational prefix_value;
    bool distance_certified = false;  // |x - t| < eps for every continuation
    bool greedy_certified = false;    // every greedy step obeyed the rule
    bool sigma_certified = false;     // sigma = +-1 through level K
    bool band_certified = false;      // running values in [y m^-beta, y m^(1-beta)] after first_dm
    std::optional<ExactLogValue> liminf_estimate;  // min over [K/2, K]
    bool liminf_in_band = false;                   // estimate in [y m^-beta, y]
    bool horizon_limited = true;
};

/// Greedy digits x_{j+1} = 0 if m^(nu(j) - j beta) <= y else d_m, after a
/// prefix of t that keeps |x - t| < eps.
DenseApproximant dense_approximant(const DigitSet& ds, const NaryExpansion& t, const Rational& beta, const Rational& y,
                                   const Rational& eps, std::size_t K);

}  // namespace cantor
