#pragma once

// Digit sets, their difference sets, and exact eventually periodic base-n
// expansions of translations t in [0, 1].

#include "cantor/bignum.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Delta = D - D with the uniform / regular / sparse predicates.
struct DeltaSet {
    std::vector<int> values;  // sorted, symmetric about 0
    bool uniform = false;
    bool regular = false;
    bool sparse = false;

    bool contains(int v) const;
};

class DigitSet {
public:
    int base() const noexcept { return base_; }
    int size() const noexcept { return static_cast<int>(digits_.size()); }
    const std::vector<int>& digits() const noexcept { return digits_; }
    int largest() const noexcept { return digits_.back(); }
    const DeltaSet& delta() const noexcept { return delta_; }

    bool contains(int d) const;
    /// #D ∩ (D + c)
    int overlap(int c) const;

    bool operator==(const DigitSet& other) const { return base_ == other.base_ && digits_ == other.digits_; }

    std::string to_string() const;

private:
    friend DigitSet make_digit_set(int n, std::vector<int> digits);
    DigitSet(int base, std::vector<int> digits);

    int base_;
    std::vector<int> digits_;
    DeltaSet delta_;
};

DigitSet make_digit_set(int n, std::vector<int> digits);
DeltaSet classify(const DigitSet& ds);

/// Base-n digit stream 0.(preperiod)(period)(period)... . An empty period
/// means the representation terminates. Instances built by
/// `canonical_expansion` / `expansion_from_rational` are canonical; the raw
/// constructor accepts any valid digits (the repeating twin of a finite t is
/// deliberately non-canonical).
class NaryExpansion {
public:
    NaryExpansion(int base, std::vector<int> preperiod, std::vector<int> period);

    int base() const noexcept { return base_; }
    const std::vector<int>& preperiod() const noexcept { return pre_; }
    const std::vector<int>& period() const noexcept { return period_; }
    bool is_finite() const noexcept { return period_.empty(); }
    bool is_zero() const noexcept { return pre_.empty() && period_.empty(); }
    bool is_canonical() const;

    /// 1-based digit t_k; 0 past the end of a finite representation.
    int digit(std::size_t k) const;

    /// Renders with the textual grammar; `with_base` appends "@n".
    std::string to_string(bool with_base = false) const;

    bool operator==(const NaryExpansion& other) const = default;

private:
    int base_;
    std::vector<int> pre_;
    std::vector<int> period_;
};

NaryExpansion canonical_expansion(int base, std::vector<int> preperiod, std::vector<int> period);

NaryExpansion expansion_from_rational(const Rational& t, int n);
Rational rational_from_expansion(const NaryExpansion& e);
/// Floor of t at k n-ary places: sum_{j<=k} t_j / n^j.
Rational truncate(const NaryExpansion& e, std::size_t k);
/// Integer h with truncate(e, k) = h / n^k.
BigInt truncation_numerator(const NaryExpansion& e, std::size_t k);
int digit_at(const NaryExpansion& e, std::size_t k);
/// The non-terminating twin 0.t1...(tk - 1)(n-1)(n-1)... of a finite expansion.
NaryExpansion alternate_representation(const NaryExpansion& e);

/// Grammar:
///   expansion := "0" | "1" | "0." body ["@" base]
///   body      := digits ["(" digits ")"] | "(" digits ")"
///   digits    := [0-9]+                      (only when n <= 10)
///              | "[" int ("," int)* "]"      (any n)
/// A "p/q" or integer literal is accepted as a rational and converted.
NaryExpansion parse_translation(std::string_view text, int n);

}  // namespace cantor
