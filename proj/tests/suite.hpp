#pragma once

// Shared fixtures: the sparse digit-set suite and pinned-seed translation draws.

#include "cantor/number_core.hpp"
#include "cantor/transition.hpp"

#include <random>
#include <set>
#include <vector>

namespace cantor::testing {

inline std::vector<DigitSet> sparse_suite() {
    return {
        make_digit_set(3, {0, 2}),      make_digit_set(8, {0, 5, 7}),  make_digit_set(11, {0, 7, 10}),
        make_digit_set(9, {0, 2, 8}),   make_digit_set(4, {0, 3}),     make_digit_set(5, {0, 2, 4}),
        make_digit_set(7, {0, 3, 6}),   make_digit_set(9, {0, 4, 8}),  make_digit_set(10, {0, 3, 9}),
        make_digit_set(13, {0, 4, 11}), make_digit_set(6, {0, 5}),     make_digit_set(7, {0, 2, 6}),
        make_digit_set(16, {0, 6, 15}), make_digit_set(12, {0, 2, 7}),
    };
}

/// Digits that keep some case alive from either counted state.
inline std::vector<int> live_digits(const DigitSet& ds) {
    std::set<int> out;
    for (int h = 0; h < ds.base(); ++h)
        for (CaseState s : {CaseState::Interval, CaseState::Potential})
            if (sigma_step(s, h, ds) != CaseState::Irrecoverable) out.insert(h);
    return {out.begin(), out.end()};
}

/// Eventually periodic translation with a nonempty period; half the draws use
/// only live digits so that long-lived traces are well represented.
inline NaryExpansion random_periodic(const DigitSet& ds, std::mt19937_64& rng) {
    const auto live = live_digits(ds);
    const bool biased = rng() % 2 == 0;
    auto draw = [&] {
        if (biased) return live[rng() % live.size()];
        return static_cast<int>(rng() % static_cast<unsigned>(ds.base()));
    };
    while (true) {
        std::vector<int> pre(rng() % 4), period(1 + rng() % 4);
        for (int& d : pre) d = draw();
        for (int& d : period) d = draw();
        auto e = canonical_expansion(ds.base(), pre, period);
        if (!e.is_finite()) return e;
    }
}

/// Finite translation of exact length 1..max_len.
inline NaryExpansion random_finite(const DigitSet& ds, std::mt19937_64& rng, std::size_t max_len) {
    while (true) {
        std::vector<int> pre(1 + rng() % max_len);
        for (int& d : pre) d = static_cast<int>(rng() % static_cast<unsigned>(ds.base()));
        auto e = canonical_expansion(ds.base(), pre, {});
        if (!e.is_zero()) return e;
    }
}

}  // namespace cantor::testing
