#pragma once

// Brute-force enumeration of C_k and of its translate by the truncation of t.
// Every interval [h/n^k, (h+1)/n^k] of C_k is classified against C_k + trunc_k(t).

#include "cantor/bignum.hpp"
#include "cantor/number_core.hpp"

#include <atomic>
#include <cstddef>
#include <vector>

namespace cantor {

inline constexpr std::size_t kDefaultCap = 1'000'000;

struct OracleOptions {
    std::size_t cap = kDefaultCap;
    unsigned threads = 1;
    const std::atomic<bool>* cancel = nullptr;
};

struct LevelSet {
    int base = 0;
    std::size_t k = 0;
    std::vector<BigInt> offsets;  // sorted; interval h is [h/n^k, (h+1)/n^k]
};

LevelSet build_level(const DigitSet& ds, std::size_t k, const OracleOptions& opts = {});
LevelSet refine(const LevelSet& ls, const DigitSet& ds, const OracleOptions& opts = {});

struct CaseFlags {
    bool interval = false;
    bool potential = false;
    bool potentially_empty = false;
    bool empty = false;
};

struct IntervalClassification {
    std::size_t k = 0;
    BigInt shift;  // trunc_k(t) * n^k
    std::vector<BigInt> offsets;
    std::vector<CaseFlags> flags;
};

struct OracleCounts {
    std::size_t interval = 0;
    std::size_t potential = 0;
    std::size_t potentially_empty = 0;
    std::size_t empty = 0;
};

/// Classification against C_k + shift / n^k.
IntervalClassification classify_shift(const DigitSet& ds, std::size_t k, const BigInt& shift,
                                      const OracleOptions& opts = {});
IntervalClassification classify_intervals(const DigitSet& ds, const NaryExpansion& t, std::size_t k,
                                          const OracleOptions& opts = {});

OracleCounts oracle_counts_shift(const DigitSet& ds, std::size_t k, const BigInt& shift,
                                 const OracleOptions& opts = {});
OracleCounts oracle_counts(const DigitSet& ds, const NaryExpansion& t, std::size_t k,
                           const OracleOptions& opts = {});

struct RationalInterval {
    Rational lo;
    Rational hi;
    Rational length() const { return hi - lo; }
    bool operator==(const RationalInterval&) const = default;
};

/// Connected components of C_k ∩ (C_k + t); degenerate components are points.
std::vector<RationalInterval> intersect_exact(const DigitSet& ds, const Rational& t, std::size_t k,
                                              const OracleOptions& opts = {});

struct FiniteDecomposition {
    std::size_t k = 0;
    std::vector<BigInt> a_offsets;   // copies (C + h) / n^k
    std::vector<Rational> b_points;  // isolated points
};

/// C ∩ (C + t) = A ∪ B for finite t, read off the level-k classification
/// with k the length of t (or `k` when larger).
FiniteDecomposition finite_decomposition(const DigitSet& ds, const NaryExpansion& t, std::size_t k = 0,
                                         const OracleOptions& opts = {});

/// #B for sparse D and finite t whose level-k copy set A is empty: the number of
/// interval-case intervals of t + n^-k plus those of t - n^-k at level k.
BigInt b_count_sparse(const DigitSet& ds, const NaryExpansion& t, std::size_t k = 0,
                      const OracleOptions& opts = {});

/// Interval-case count at level k from the sigma automaton: mu(k) when
/// sigma(k) = 1, else 0.
BigInt interval_case_count(const DigitSet& ds, const NaryExpansion& t, std::size_t k);

}  // namespace cantor
