#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/number_core.hpp"

#include <random>
#include <set>

using namespace cantor;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Unsupported;
}

// Pairwise sparse check written independently of DeltaSet.
bool sparse_pairwise(const std::vector<int>& d) {
    std::set<int> delta;
    for (int a : d)
        for (int b : d) delta.insert(a - b);
    for (int x : delta)
        for (int y : delta)
            if (x != y && std::abs(x - y) < 2) return false;
    return true;
}

}  // namespace

TEST_CASE("digit set validation") {
    auto mt = make_digit_set(3, {0, 2});
    CHECK(mt.size() == 2);
    CHECK(make_digit_set(9, {8, 0, 2}).digits() == std::vector<int>{0, 2, 8});
    CHECK(code_of([] { make_digit_set(3, {0, 1, 2}); }) == ErrorCode::TooManyDigits);
    CHECK(code_of([] { make_digit_set(2, {0, 1}); }) == ErrorCode::BaseTooSmall);
    CHECK(code_of([] { make_digit_set(5, {0, 5}); }) == ErrorCode::DigitOutOfRange);
    CHECK(code_of([] { make_digit_set(5, {0, 2, 2}); }) == ErrorCode::DuplicateDigit);
    CHECK(code_of([] { make_digit_set(5, {1, 3}); }) == ErrorCode::FirstDigitNonzero);
    CHECK(code_of([] { make_digit_set(5, {0}); }) == ErrorCode::TooFewDigits);
}

TEST_CASE("classification") {
    auto a = classify(make_digit_set(8, {0, 5, 7}));
    CHECK(a.sparse);
    CHECK_FALSE(a.regular);
    CHECK_FALSE(a.uniform);

    auto b = classify(make_digit_set(3, {0, 2}));
    CHECK(b.uniform);
    CHECK(b.regular);
    CHECK(b.sparse);

    auto c = classify(make_digit_set(9, {0, 2, 8}));
    CHECK(c.regular);
    CHECK_FALSE(c.uniform);
    CHECK(c.values == std::vector<int>{-8, -6, -2, 0, 2, 6, 8});

    CHECK_FALSE(classify(make_digit_set(17, {0, 2, 4, 7, 10, 13})).sparse);
}

TEST_CASE("classification hierarchy and sparse cross-check on random sets") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + static_cast<int>(rng() % 14);
        std::set<int> pick{0};
        int target = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        while (static_cast<int>(pick.size()) < target) pick.insert(static_cast<int>(rng() % static_cast<unsigned>(n)));
        std::vector<int> d(pick.begin(), pick.end());
        auto delta = classify(make_digit_set(n, d));
        if (delta.uniform) CHECK(delta.regular);
        if (delta.regular) CHECK(delta.sparse);
        CHECK(delta.sparse == sparse_pairwise(d));
    }
}

TEST_CASE("expansion from rational") {
    auto e = expansion_from_rational(Rational(3, 4), 3);
    CHECK(e.preperiod().empty());
    CHECK(e.period() == std::vector<int>{2, 0});
    CHECK(expansion_from_rational(Rational(2, 3), 3).preperiod() == std::vector<int>{2});
    CHECK(expansion_from_rational(Rational(2, 3), 3).is_finite());
    CHECK(expansion_from_rational(Rational(1, 2), 3).period() == std::vector<int>{1});
    CHECK(expansion_from_rational(Rational(0), 3).is_zero());
    CHECK(code_of([] { expansion_from_rational(Rational(5, 4), 3); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { expansion_from_rational(Rational(-1, 4), 3); }) == ErrorCode::OutOfRange);
}

TEST_CASE("rational from expansion") {
    CHECK(rational_from_expansion(NaryExpansion(3, {}, {2, 0})) == Rational(3, 4));
    CHECK(rational_from_expansion(NaryExpansion(3, {2}, {})) == Rational(2, 3));
    CHECK(rational_from_expansion(NaryExpansion(3, {}, {})) == 0);
    CHECK(rational_from_expansion(NaryExpansion(3, {1}, {0, 2})) == Rational(5, 12));
}

TEST_CASE("round trip for all small denominators") {
    for (int n = 3; n <= 16; ++n) {
        for (int q = 1; q <= 10000; q += (q < 200 ? 1 : 97)) {
            for (int p = 0; p <= q; p += (q < 60 ? 1 : q / 7 + 1)) {
                Rational t(p, q);
                auto e = expansion_from_rational(t, n);
                REQUIRE(rational_from_expansion(e) == t);
                CHECK(e.is_canonical());
            }
        }
    }
}

TEST_CASE("canonical form") {
    auto e = canonical_expansion(3, {1, 2, 0}, {2, 0, 2, 0});
    CHECK(e.preperiod() == std::vector<int>{1});
    CHECK(e.period() == std::vector<int>{2, 0});
    auto f = canonical_expansion(3, {0, 1}, {2});
    CHECK(f.preperiod() == std::vector<int>{0, 2});
    CHECK(f.is_finite());
    auto one = canonical_expansion(3, {2}, {2});
    CHECK(rational_from_expansion(one) == 1);
    CHECK(canonical_expansion(5, {3, 0, 0}, {0}).preperiod() == std::vector<int>{3});
}

TEST_CASE("truncation and digits") {
    auto t = NaryExpansion(3, {}, {2, 0});
    CHECK(truncate(t, 2) == Rational(2, 3));
    CHECK(truncate(t, 3) == Rational(20, 27));
    CHECK(truncate(t, 0) == 0);
    CHECK(digit_at(t, 5) == 2);
    CHECK(digit_at(NaryExpansion(3, {2}, {}), 7) == 0);
    CHECK(digit_at(NaryExpansion(3, {1}, {0, 2}), 2) == 0);
    CHECK(code_of([&] { digit_at(t, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("truncation bound") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        int q = 1 + static_cast<int>(rng() % 500);
        int p = static_cast<int>(rng() % static_cast<unsigned>(q));  // t = 1 has no strict bound
        Rational t(p, q);
        auto e = expansion_from_rational(t, n);
        for (std::size_t k = 0; k <= 64; ++k) {
            Rational gap = t - truncate(e, k);
            REQUIRE(gap >= 0);
            REQUIRE(gap < Rational(1, ipow(n, k)));
            if (gap == 0) REQUIRE((e.is_finite() && e.preperiod().size() <= k));
        }
    }
}

TEST_CASE("alternate representation") {
    auto a = alternate_representation(NaryExpansion(3, {1}, {}));
    CHECK(a.preperiod() == std::vector<int>{0});
    CHECK(a.period() == std::vector<int>{2});
    auto b = alternate_representation(NaryExpansion(3, {2}, {}));
    CHECK(b.preperiod() == std::vector<int>{1});
    CHECK(code_of([] { alternate_representation(NaryExpansion(3, {}, {0, 1})); }) == ErrorCode::NotFinite);
    CHECK(code_of([] { alternate_representation(NaryExpansion(3, {}, {})); }) == ErrorCode::ZeroHasNoTwin);

    for (int n = 3; n <= 12; ++n)
        for (int q = 1; q <= 200; ++q)
            for (int p = 1; p <= q; ++p) {
                auto e = expansion_from_rational(Rational(p, q), n);
                if (!e.is_finite() || rational_from_expansion(e) == 1) continue;
                REQUIRE(rational_from_expansion(alternate_representation(e)) == Rational(p, q));
            }
}

TEST_CASE("parse and render") {
    auto e = parse_translation("0.(20)", 3);
    CHECK(rational_from_expansion(e) == Rational(3, 4));
    CHECK(parse_translation("3/4", 3) == e);
    CHECK(e.to_string() == "0.(20)");
    CHECK(e.to_string(true) == "0.(20)@3");
    auto big = parse_translation("0.[2,0]([1,2])@11", 0);
    CHECK(big.base() == 11);
    CHECK(big.to_string(true) == "0.[2,0]([1,2])@11");
    CHECK(parse_translation("0", 3).is_zero());
    CHECK(rational_from_expansion(parse_translation("1", 3)) == 1);
    CHECK(parse_translation("0.1(02)", 3).preperiod() == std::vector<int>{1});
    CHECK(code_of([] { parse_translation("0.(3)", 3); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_translation("0.12", 11); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_translation("0.(20)@5", 3); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_translation("0.()", 3); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_translation("x", 3); }) == ErrorCode::ParseError);
}
