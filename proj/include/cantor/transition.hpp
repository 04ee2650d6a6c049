#pragma once

// The xi transition function, the sigma case automaton and per-step branch
// counts for refining an interval-case or potential-case n-ary interval.

#include "cantor/number_core.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace cantor {

/// sigma values: INTERVAL = 1, POTENTIAL = -1, SIMULTANEOUS = i, IRRECOVERABLE = 0.
enum class CaseState { Interval, Potential, Simultaneous, Irrecoverable };

enum class XiValue { Zero, PlusOne, MinusOne, PlusI, MinusI };

std::string_view to_string(CaseState s);
std::string_view to_string(XiValue v);
/// "1", "-1", "i", "0".
std::string_view sigma_symbol(CaseState s);

XiValue xi(CaseState state, int digit, const DigitSet& ds);

/// xi(state, digit) * state, looked up in the Gaussian-unit product table.
CaseState sigma_step(CaseState state, int digit, const DigitSet& ds);

struct BranchCounts {
    int interval = 0;
    int potential = 0;
    int total() const noexcept { return interval + potential; }
};

BranchCounts branch_counts(CaseState state, int digit, const DigitSet& ds);

/// 1-based digit source t_k for streams that are not eventually periodic.
using DigitStream = std::function<int(std::size_t)>;

struct SigmaTrace {
    DigitSet digit_set;
    /// digits[k] = t_k for 1 <= k <= K; digits[0] is an unused 0.
    std::vector<int> digits;
    /// states[k] = sigma(k) for 0 <= k <= K.
    std::vector<CaseState> states;
    /// factors[k] = children per parent going from level k-1 to k; factors[0] = 1.
    /// Empty once the parent level is SIMULTANEOUS (no single-branch count).
    std::vector<std::optional<int>> factors;
    bool horizon_limited = false;

    std::size_t horizon() const noexcept { return states.size() - 1; }
    std::optional<std::size_t> first_simultaneous() const;
};

SigmaTrace sigma_sequence(const NaryExpansion& t, std::size_t K, const DigitSet& ds);
SigmaTrace sigma_sequence(const DigitStream& t, std::size_t K, const DigitSet& ds);

}  // namespace cantor
