#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/geometry_oracle.hpp"
#include "cantor/transition.hpp"
#include "suite.hpp"

using namespace cantor;
using cantor::testing::random_finite;
using cantor::testing::random_periodic;
using cantor::testing::sparse_suite;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// x in C iff one of its base-n representations uses only digits of D.
bool in_cantor(const Rational& x, const DigitSet& ds) {
    if (x < 0 || x > 1) return false;
    auto uses_d = [&](const NaryExpansion& e) {
        for (int d : e.preperiod())
            if (!ds.contains(d)) return false;
        for (int d : e.period())
            if (!ds.contains(d)) return false;
        return !e.is_finite() || ds.contains(0);
    };
    auto e = expansion_from_rational(x, ds.base());
    if (uses_d(e)) return true;
    if (e.is_finite() && !e.is_zero()) return uses_d(alternate_representation(e));
    return false;
}

}  // namespace

TEST_CASE("level sets") {
    const auto mt = make_digit_set(3, {0, 2});
    CHECK(build_level(mt, 2).offsets == big({0, 2, 6, 8}));
    CHECK(build_level(mt, 0).offsets == big({0}));
    CHECK(build_level(make_digit_set(9, {0, 2, 8}), 1).offsets == big({0, 2, 8}));

    LevelSet one{3, 1, big({2})};
    CHECK(refine(one, mt).offsets == big({6, 8}));
    CHECK(refine(LevelSet{3, 0, big({0})}, mt).offsets == big({0, 2}));
    CHECK(refine(build_level(mt, 1), mt).offsets == build_level(mt, 2).offsets);

    for (const auto& ds : sparse_suite())
        for (std::size_t k = 0; k <= 8 && ipow(ds.size(), k + 1) <= 100000; ++k)
            CHECK(refine(build_level(ds, k), ds).offsets == build_level(ds, k + 1).offsets);

    OracleOptions small{100, 1, nullptr};
    CHECK_THROWS_AS(build_level(mt, 7, small), Error);
}

TEST_CASE("classification examples") {
    const auto mt = make_digit_set(3, {0, 2});
    const auto t = NaryExpansion(3, {}, {2, 0});
    auto c1 = classify_intervals(mt, t, 1);
    CHECK(c1.shift == 2);
    CHECK(c1.flags[1].interval);
    CHECK_FALSE(c1.flags[0].interval);

    auto c2 = classify_intervals(mt, t, 2);
    std::vector<BigInt> hits;
    for (std::size_t i = 0; i < c2.offsets.size(); ++i)
        if (c2.flags[i].interval) hits.push_back(c2.offsets[i]);
    CHECK(hits == big({6, 8}));

    auto half = classify_intervals(mt, expansion_from_rational(Rational(1, 2), 3), 1);
    CHECK(half.flags[1].potential);

    auto counts = oracle_counts(mt, t, 2);
    CHECK(counts.interval == 2);
    CHECK(counts.potential == 0);

    const auto nga = make_digit_set(17, {0, 2, 4, 7, 10, 13});
    auto nc = oracle_counts(nga, NaryExpansion(17, {}, {2}), 3);
    CHECK(nc.interval == 8);
    CHECK(nc.potential == 12);

    auto dead = oracle_counts(make_digit_set(8, {0, 5, 7}), NaryExpansion(8, {}, {3}), 1);
    CHECK(dead.interval == 0);
    CHECK(dead.potential == 0);
}

TEST_CASE("flag exclusivity") {
    std::mt19937_64 rng(3);
    for (const auto& ds : sparse_suite()) {
        for (int trial = 0; trial < 5; ++trial) {
            auto t = random_periodic(ds, rng);
            for (std::size_t k = 0; ipow(ds.size(), k) <= 3000; ++k) {
                auto cls = classify_intervals(ds, t, k);
                for (const auto& f : cls.flags) {
                    CHECK((f.interval || f.potential || f.potentially_empty || f.empty));
                    if (f.empty) CHECK_FALSE((f.interval || f.potential || f.potentially_empty));
                    CHECK_FALSE((f.interval && f.potential));
                }
            }
        }
    }
}

TEST_CASE("threaded classification is identical") {
    const auto ds = make_digit_set(3, {0, 2});
    const auto t = NaryExpansion(3, {}, {2, 0, 1});
    OracleOptions one{kDefaultCap, 1, nullptr}, many{kDefaultCap, 8, nullptr};
    auto a = classify_intervals(ds, t, 15, one);
    auto b = classify_intervals(ds, t, 15, many);
    REQUIRE(a.offsets == b.offsets);
    for (std::size_t i = 0; i < a.flags.size(); ++i) {
        CHECK(a.flags[i].interval == b.flags[i].interval);
        CHECK(a.flags[i].potential == b.flags[i].potential);
        CHECK(a.flags[i].potentially_empty == b.flags[i].potentially_empty);
    }
}

TEST_CASE("big offsets fall back to arbitrary precision") {
    // 200^18 exceeds the 128-bit fast path.
    const auto ds = make_digit_set(200, {0, 199});
    const auto t = expansion_from_rational(Rational(199, 40001), 200);
    const std::size_t k = 18;
    const auto tr = sigma_sequence(t, k, ds);
    BigInt mu = 1;
    for (std::size_t j = 1; j <= k; ++j) mu *= *tr.factors[j];
    const auto c = oracle_counts(ds, t, k);
    CHECK(BigInt(c.interval + c.potential) == mu);
    CHECK(build_level(ds, k).offsets.size() == 262144);
}

TEST_CASE("literal intersections") {
    const auto mt = make_digit_set(3, {0, 2});
    auto k1 = intersect_exact(mt, Rational(3, 4), 1);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].lo == Rational(3, 4));
    CHECK(k1[0].hi == 1);

    auto k2 = intersect_exact(mt, Rational(3, 4), 2);
    REQUIRE(k2.size() == 2);
    for (const auto& c : k2) CHECK(c.length() == Rational(1, 36));

    auto zero = intersect_exact(mt, Rational(0), 3);
    CHECK(zero.size() == 8);
}

TEST_CASE("empty and potentially-empty intervals meet nothing") {
    std::mt19937_64 rng(17);
    for (const auto& ds : sparse_suite()) {
        for (int trial = 0; trial < 4; ++trial) {
            auto t = random_periodic(ds, rng);
            const Rational tv = rational_from_expansion(t);
            for (std::size_t k = 1; ipow(ds.size(), k) <= 500; ++k) {
                auto cls = classify_intervals(ds, t, k);
                auto comps = intersect_exact(ds, tv, k);
                const BigInt N = ipow(ds.base(), k);
                for (std::size_t i = 0; i < cls.offsets.size(); ++i) {
                    const auto& f = cls.flags[i];
                    if (f.interval || f.potential) continue;
                    const Rational lo(cls.offsets[i], N), hi(cls.offsets[i] + 1, N);
                    for (const auto& c : comps) CHECK_FALSE((c.lo <= hi && lo <= c.hi));
                }
            }
        }
    }
}

TEST_CASE("persistence of live intervals") {
    std::mt19937_64 rng(23);
    for (const auto& ds : sparse_suite()) {
        for (int trial = 0; trial < 4; ++trial) {
            auto t = random_periodic(ds, rng);
            std::size_t K = 0;
            while (ipow(ds.size(), K + 1) <= 5000) ++K;
            const auto tr = sigma_sequence(t, K, ds);
            for (std::size_t k = 0; k < K && tr.states[k + 1] != CaseState::Irrecoverable; ++k) {
                auto parent = classify_intervals(ds, t, k);
                auto child = classify_intervals(ds, t, k + 1);
                std::set<BigInt> live_parents;
                for (std::size_t j = 0; j < child.offsets.size(); ++j)
                    if (child.flags[j].interval || child.flags[j].potential)
                        live_parents.insert(child.offsets[j] / ds.base());
                for (std::size_t i = 0; i < parent.offsets.size(); ++i)
                    if (parent.flags[i].interval || parent.flags[i].potential)
                        CHECK(live_parents.count(parent.offsets[i]) == 1);
            }
        }
    }
}

TEST_CASE("finite decomposition") {
    const auto mt = make_digit_set(3, {0, 2});
    auto d = finite_decomposition(mt, NaryExpansion(3, {2}, {}));
    CHECK(d.k == 1);
    CHECK(d.a_offsets == big({2}));
    CHECK(d.b_points.empty());

    auto third = finite_decomposition(mt, NaryExpansion(3, {1}, {}));
    CHECK(third.a_offsets.empty());
    CHECK(third.b_points == std::vector<Rational>{Rational(1, 3), Rational(2, 3), Rational(1)});

    auto zero = finite_decomposition(make_digit_set(9, {0, 2, 8}), NaryExpansion(9, {}, {}));
    CHECK(zero.k == 0);
    CHECK(zero.a_offsets == big({0}));
    CHECK(zero.b_points.empty());

    CHECK_THROWS_AS(finite_decomposition(mt, NaryExpansion(3, {}, {1})), Error);
}

TEST_CASE("B points lie in both sets and match the formula") {
    std::mt19937_64 rng(29);
    for (const auto& ds : sparse_suite()) {
        for (int trial = 0; trial < 30; ++trial) {
            auto t = random_finite(ds, rng, 4);
            if (ipow(ds.size(), t.preperiod().size()) > 20000) continue;
            const Rational tv = rational_from_expansion(t);
            auto dec = finite_decomposition(ds, t);
            for (const auto& p : dec.b_points) {
                CHECK(in_cantor(p, ds));
                CHECK(in_cantor(p - tv, ds));
            }
            if (dec.a_offsets.empty()) CHECK(b_count_sparse(ds, t) == dec.b_points.size());
            else CHECK_THROWS_AS(b_count_sparse(ds, t), Error);
        }
    }
    CHECK_THROWS_AS(b_count_sparse(make_digit_set(3, {0, 2}), NaryExpansion(3, {}, {})), Error);
    CHECK(b_count_sparse(make_digit_set(3, {0, 2}), NaryExpansion(3, {1}, {})) == 3);
    CHECK(b_count_sparse(make_digit_set(9, {0, 2, 7}), NaryExpansion(9, {1}, {})) == 0);
}
