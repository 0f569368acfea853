#include "hjcert/surface.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <set>

using namespace hjcert;

namespace {
Rational rat(const char* text) { return Rational::parse(text); }
} // namespace

TEST_CASE("surface numerics pairing") {
    SurfaceNumerics n(4);
    CHECK(n.ksq_prime == 8);
    CHECK(n.b2 == 2);
    CHECK(SurfaceNumerics(15).ksq_prime == -3);
    CHECK_THROWS_AS(SurfaceNumerics(3), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceNumerics(16), std::invalid_argument);
    for (int c2 = kC2Min; c2 <= kC2Max; ++c2) {
        SurfaceNumerics s(c2);
        CHECK(s.c2 + s.ksq_prime == 12);
        CHECK(s.b2 == s.c2 - 2);
    }
}

TEST_CASE("curve budget") {
    CHECK(curve_budget(4) == 1);
    CHECK(curve_budget(10) == 7);
    CHECK(curve_budget(13) == 10);
    CHECK_THROWS_AS(curve_budget(3), std::invalid_argument);
    CHECK_THROWS_AS(curve_budget(16), std::invalid_argument);
}

TEST_CASE("LHS examples") {
    CHECK(lhs_value(4, 1) == rat("2/3"));
    CHECK(lhs_value(6, 1) == rat("0"));
    CHECK(lhs_value(13, 4) == rat("2/3"));
    CHECK(lhs_value(12, 3) == rat("0"));
    CHECK(lhs_value(5, 1) == rat("1/3"));
    CHECK(lhs_value(5, 2) == rat("4/3"));
    CHECK(lhs_value(10, 4) == rat("5/3"));
    CHECK_THROWS_AS(lhs_value(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(lhs_value(3, 1), std::invalid_argument);
}

TEST_CASE("LHS closed form agrees with term-by-term evaluation") {
    // sum e(E_p) - c2 + K'^2/3 with sum e(E_p) = (c2 - 3) + r
    for (int c2 = kC2Min; c2 <= kC2Max; ++c2) {
        for (int r = 1; r <= kMaxSingularPoints; ++r) {
            Rational direct = Rational((c2 - 3 + r) - c2) + Rational(12 - c2, 3);
            CHECK(lhs_value(c2, r) == direct);
        }
    }
}

TEST_CASE("RHS summation") {
    std::vector<HJString> lemma_max = {HJString({2}), HJString({2, 2}), HJString({2, 3})};
    CHECK(rhs_value(lemma_max) == rat("9/10"));
    std::vector<HJString> pair = {HJString({2, 2, 2}), HJString({2, 2, 3})};
    CHECK(rhs_value(pair) == rat("1/4"));
    std::vector<HJString> triple = {HJString({2, 2, 2}), HJString({2, 2, 3}), HJString({2, 2})};
    CHECK(rhs_value(triple) == rat("7/12"));
    CHECK_THROWS_AS(rhs_value({}), std::invalid_argument);
}

TEST_CASE("first primes") {
    CHECK(first_primes(10) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(first_primes(20).back() == 71);
}

TEST_CASE("prime reciprocal bound") {
    auto [sum5, ok5] = reciprocal_prime_bound(5);
    CHECK(sum5 == rat("2927/2310"));
    CHECK(ok5);

    auto [sum6, ok6] = reciprocal_prime_bound(6);
    CHECK(sum6 == rat("2927/2310") + rat("1/13"));
    CHECK(sum6 <= Rational(3));
    CHECK(ok6);

    for (int r = 5; r <= 20; ++r) {
        auto [sum, ok] = reciprocal_prime_bound(r);
        CHECK(ok);
        CHECK(sum <= Rational(r - 3));
    }
    CHECK_THROWS_AS(reciprocal_prime_bound(4), std::invalid_argument);
}

TEST_CASE("case instance validation") {
    CHECK_NOTHROW(CaseInstance(7, 2, {3, 1}));
    CHECK_THROWS_AS(CaseInstance(7, 2, {1, 3}), std::invalid_argument);   // not descending
    CHECK_THROWS_AS(CaseInstance(7, 2, {2, 1}), std::invalid_argument);   // wrong sum
    CHECK_THROWS_AS(CaseInstance(7, 3, {3, 1}), std::invalid_argument);   // size != r
    CHECK_THROWS_AS(CaseInstance(7, 1, {4}), std::invalid_argument);      // part > 3
}

TEST_CASE("case instances at single c2 values") {
    auto at4 = case_instances_for(4);
    REQUIRE(at4.size() == 1);
    CHECK(at4[0].r == 1);
    CHECK(at4[0].partition == std::vector<int>{1});

    auto at7 = case_instances_for(7);
    REQUIRE(at7.size() == 4);
    CHECK(at7[0].r == 2);
    CHECK(at7[0].partition == std::vector<int>{3, 1});
    CHECK(at7[1].r == 2);
    CHECK(at7[1].partition == std::vector<int>{2, 2});
    CHECK(at7[2].r == 3);
    CHECK(at7[2].partition == std::vector<int>{2, 1, 1});
    CHECK(at7[3].r == 4);
    CHECK(at7[3].partition == std::vector<int>{1, 1, 1, 1});

    auto at14 = case_instances_for(14);
    REQUIRE(at14.size() == 1);
    CHECK(at14[0].r == 4);
    CHECK(at14[0].partition == std::vector<int>{3, 3, 3, 2});

    auto at15 = case_instances_for(15);
    REQUIRE(at15.size() == 1);
    CHECK(at15[0].partition == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("full scan: duplicate-free, covers every case, never r >= 5") {
    auto all = enumerate_case_instances();
    CHECK(all.size() == 34);

    std::set<std::pair<int, std::vector<int>>> seen;
    for (const auto& inst : all) {
        CHECK(inst.r <= 4);
        CHECK(inst.r >= (curve_budget(inst.numerics.c2) + 2) / 3);
        int sum = 0;
        for (int part : inst.partition) sum += part;
        CHECK(sum == curve_budget(inst.numerics.c2));
        CHECK(seen.emplace(inst.numerics.c2, inst.partition).second);
    }

    // the by-hand case list: (c2, r) pairs that must appear
    std::set<std::pair<int, int>> expected_pairs;
    for (const auto& inst : all) expected_pairs.emplace(inst.numerics.c2, inst.r);
    CHECK(expected_pairs.count({4, 1}) == 1);
    CHECK(expected_pairs.count({5, 1}) == 1);
    CHECK(expected_pairs.count({5, 2}) == 1);
    CHECK(expected_pairs.count({6, 1}) == 1);
    CHECK(expected_pairs.count({6, 2}) == 1);
    CHECK(expected_pairs.count({6, 3}) == 1);
    CHECK(expected_pairs.count({7, 2}) == 1);
    CHECK(expected_pairs.count({8, 2}) == 1);
    CHECK(expected_pairs.count({9, 2}) == 1);
    CHECK(expected_pairs.count({10, 3}) == 1);
    CHECK(expected_pairs.count({11, 3}) == 1);
    CHECK(expected_pairs.count({12, 3}) == 1);
    CHECK(expected_pairs.count({13, 4}) == 1);
    CHECK(expected_pairs.count({14, 4}) == 1);
    CHECK(expected_pairs.count({15, 4}) == 1);
    CHECK(expected_pairs.count({4, 2}) == 0);   // budget 1 cannot split
    CHECK(expected_pairs.count({15, 3}) == 0);  // budget 12 needs 4 points

    // canonical global order: c2 ascending, r ascending, partitions
    // lexicographically descending
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto& a = all[i - 1];
        const auto& b = all[i];
        bool ordered = a.numerics.c2 < b.numerics.c2 ||
                       (a.numerics.c2 == b.numerics.c2 &&
                        (a.r < b.r || (a.r == b.r && a.partition > b.partition)));
        CHECK(ordered);
    }
}
