#include "hjcert/hj_string.hpp"
#include "hjcert/profile.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <future>
#include <numeric>
#include <random>

using namespace hjcert;

namespace {

HJString make(std::initializer_list<int> entries) { return HJString(std::vector<int>(entries)); }

Rational rat(const char* text) { return Rational::parse(text); }

// One reference row: string, order, discrepancy numerators over the order,
// D^2, gamma.
struct Row {
    std::vector<int> string;
    long order;
    std::vector<long> scaled;
    const char* d2;
    const char* gamma;
};

// The two tables of length-3 (entry sum <= 9) and length-2 (entry sum
// <= 7) invariants, frozen.
const std::vector<Row> kTable1 = {
    {{2, 2, 2}, 4, {0, 0, 0}, "0", "1/4"},
    {{2, 2, 3}, 7, {1, 2, 3}, "-3/7", "0"},
    {{2, 3, 2}, 8, {2, 4, 2}, "-1/2", "-1/24"},
    {{2, 2, 4}, 10, {2, 4, 6}, "-6/5", "-3/10"},
    {{2, 4, 2}, 12, {4, 8, 4}, "-4/3", "-13/36"},
    {{3, 2, 3}, 12, {6, 6, 6}, "-1", "-1/4"},
    {{2, 3, 3}, 13, {4, 8, 7}, "-15/13", "-4/13"},
    {{2, 2, 5}, 13, {3, 6, 9}, "-27/13", "-8/13"},
    {{2, 5, 2}, 16, {6, 12, 6}, "-9/4", "-11/16"},
    {{3, 2, 4}, 17, {9, 10, 11}, "-31/17", "-28/51"},
    {{2, 3, 4}, 18, {6, 12, 12}, "-2", "-11/18"},
    {{2, 4, 3}, 19, {7, 14, 11}, "-39/19", "-12/19"},
    {{3, 3, 3}, 21, {12, 15, 12}, "-13/7", "-4/7"},
};

const std::vector<Row> kTable2 = {
    {{2, 2}, 3, {0, 0}, "0", "1/3"},
    {{2, 3}, 5, {1, 2}, "-2/5", "1/15"},
    {{2, 4}, 7, {2, 4}, "-8/7", "-5/21"},
    {{3, 3}, 8, {4, 4}, "-1", "-5/24"},
    {{2, 5}, 9, {3, 6}, "-2", "-5/9"},
    {{3, 4}, 11, {6, 7}, "-20/11", "-17/33"},
};

void check_row(const Row& row) {
    CAPTURE(HJString(row.string).str());
    SingularityProfile p = profile(HJString(row.string));
    CHECK(p.order == Integer(row.order));
    auto scaled = p.scaled_discrepancies();
    REQUIRE(scaled.size() == row.scaled.size());
    for (std::size_t j = 0; j < scaled.size(); ++j) CHECK(scaled[j] == Integer(row.scaled[j]));
    CHECK(p.d_squared == rat(row.d2));
    CHECK(p.gamma == rat(row.gamma));
}

} // namespace

TEST_CASE("HJString validation") {
    CHECK_THROWS_AS(HJString({}), std::invalid_argument);
    CHECK_THROWS_AS(make({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make({2, 0}), std::invalid_argument);
    CHECK(make({2}).length() == 1);
    CHECK(make({2, 3, 2, 2, 2, 2, 2, 2}).length() == 8);  // no length cap here
}

TEST_CASE("canonical orientation and ordering") {
    CHECK(canonical_string(make({3, 2, 2})) == make({2, 2, 3}));
    CHECK(canonical_string(make({2, 2, 3})) == make({2, 2, 3}));
    CHECK(canonical_string(make({2, 3, 2})) == make({2, 3, 2}));
    CHECK(string_less(make({2, 2, 2}), make({2, 2, 3})));
    CHECK(string_less(make({2, 2, 3}), make({2, 2})));  // longer first
    CHECK_FALSE(string_less(make({2, 2}), make({2, 2})));
}

TEST_CASE("intersection matrix layout") {
    IntersectionMatrix m(make({2, 2, 3}));
    CHECK(m.at(0, 0) == Integer(-2));
    CHECK(m.at(1, 1) == Integer(-2));
    CHECK(m.at(2, 2) == Integer(-3));
    CHECK(m.at(0, 1) == Integer(1));
    CHECK(m.at(1, 0) == Integer(1));
    CHECK(m.at(0, 2) == Integer(0));
    IntersectionMatrix single(make({2}));
    CHECK(single.at(0, 0) == Integer(-2));
    IntersectionMatrix pair(make({2, 3}));
    CHECK(pair.at(0, 0) == Integer(-2));
    CHECK(pair.at(1, 1) == Integer(-3));
    CHECK(pair.at(0, 1) == Integer(1));
    CHECK(pair.at(1, 0) == Integer(1));
}

TEST_CASE("continuant examples") {
    CHECK(continuant(make({2, 2, 2})) == Integer(4));
    CHECK(continuant(make({3, 2, 4})) == Integer(17));
    CHECK(continuant(make({2, 5})) == Integer(9));
    CHECK(continuant(make({7})) == Integer(7));
}

TEST_CASE("discrepancy solutions") {
    auto a = solve_discrepancies(make({2, 2, 3}));
    CHECK(a == std::vector<Rational>{rat("1/7"), rat("2/7"), rat("3/7")});
    CHECK(solve_discrepancies(make({2, 2, 2})) ==
          std::vector<Rational>{rat("0"), rat("0"), rat("0")});
    CHECK(solve_discrepancies(make({3, 4})) == std::vector<Rational>{rat("6/11"), rat("7/11")});
    CHECK(solve_discrepancies(make({4})) == std::vector<Rational>{rat("1/2")});
}

TEST_CASE("D^2 examples") {
    CHECK(dp_squared(make({2, 2, 3})) == rat("-3/7"));
    CHECK(dp_squared(make({2, 2})) == rat("0"));
    CHECK(dp_squared(make({3, 3})) == rat("-1"));
}

TEST_CASE("contribution examples") {
    CHECK(contribution(make({2, 3})) == rat("1/15"));
    CHECK(contribution(make({2})) == rat("1/2"));
    CHECK(contribution(make({3, 2, 4})) == rat("-28/51"));
}

TEST_CASE("hj_expansion") {
    CHECK(hj_expansion(3, 2) == make({2, 2}));
    CHECK(hj_expansion(7, 1) == make({7}));
    CHECK(hj_expansion(2, 1) == make({2}));
    CHECK(hj_expansion(7, 3) == make({3, 2, 2}));
    CHECK_THROWS_AS(hj_expansion(6, 3), std::invalid_argument);  // gcd 3
    CHECK_THROWS_AS(hj_expansion(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(hj_expansion(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(hj_expansion(1, 1), std::invalid_argument);
}

TEST_CASE("hj_expansion soundness: continued fraction value and continuant") {
    for (long n = 2; n <= 500; ++n) {
        for (long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            HJString s = hj_expansion(n, q);
            CHECK(continuant(s) == Integer(n));
            CHECK(oracle::continued_fraction_value(s) == Rational(n, q));
            for (int e : s.entries()) CHECK(e >= 2);
        }
    }
}

TEST_CASE("profile bundles and cross-checks") {
    SingularityProfile p = profile(make({2, 3, 2}));
    CHECK(p.order == Integer(8));
    CHECK(p.discrepancies == std::vector<Rational>{rat("1/4"), rat("1/2"), rat("1/4")});
    CHECK(p.d_squared == rat("-1/2"));
    CHECK(p.gamma == rat("-1/24"));

    SingularityProfile q = profile(make({2, 2}));
    CHECK(q.order == Integer(3));
    CHECK(q.d_squared == rat("0"));
    CHECK(q.gamma == rat("1/3"));

    SingularityProfile r = profile(make({2, 2, 5}));
    CHECK(r.order == Integer(13));
    CHECK(r.discrepancies == std::vector<Rational>{rat("3/13"), rat("6/13"), rat("9/13")});
    CHECK(r.d_squared == rat("-27/13"));
    CHECK(r.gamma == rat("-8/13"));
}

TEST_CASE("reference table rows, all frozen values") {
    for (const auto& row : kTable1) check_row(row);
    for (const auto& row : kTable2) check_row(row);
}

TEST_CASE("reversal symmetry over the desk-scale universe") {
    for (int length = 1; length <= 3; ++length) {
        for (const auto& s : oracle::all_strings(length, 30)) {
            HJString r = s.reversed();
            CHECK(continuant(r) == continuant(s));
            auto a = solve_discrepancies(s);
            auto b = solve_discrepancies(r);
            std::reverse(b.begin(), b.end());
            CHECK(a == b);
            CHECK(dp_squared(r) == dp_squared(s));
            CHECK(contribution(r) == contribution(s));
        }
    }
    // longer strings, deterministic random sample
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(4, 8);
    std::uniform_int_distribution<int> entry(2, 9);
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (auto& e : entries) e = entry(rng);
        HJString s(entries);
        HJString r = s.reversed();
        CHECK(continuant(r) == continuant(s));
        CHECK(dp_squared(r) == dp_squared(s));
        CHECK(contribution(r) == contribution(s));
    }
}

TEST_CASE("system residual is identically zero") {
    auto residual_zero = [](const HJString& s) {
        auto a = solve_discrepancies(s);
        const auto& n = s.entries();
        std::size_t k = n.size();
        for (std::size_t j = 0; j < k; ++j) {
            Rational left = Rational(n[j]) * a[j];
            if (j > 0) left -= a[j - 1];
            if (j + 1 < k) left -= a[j + 1];
            if (left != Rational(n[j] - 2)) return false;
        }
        return true;
    };
    for (int length = 1; length <= 3; ++length) {
        for (const auto& s : oracle::all_strings(length, 20)) CHECK(residual_zero(s));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(4, 8);
    std::uniform_int_distribution<int> entry(2, 12);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (auto& e : entries) e = entry(rng);
        CHECK(residual_zero(HJString(entries)));
    }
}

TEST_CASE("both D^2 routes agree everywhere tested") {
    for (int length = 1; length <= 3; ++length) {
        for (const auto& s : oracle::all_strings(length, 20)) {
            CHECK(dp_squared(s) == dp_squared_quadratic_form(s));
        }
    }
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> len(4, 8);
    std::uniform_int_distribution<int> entry(2, 10);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (auto& e : entries) e = entry(rng);
        HJString s(entries);
        CHECK(dp_squared(s) == dp_squared_quadratic_form(s));
    }
}

TEST_CASE("Du Val strings have zero discrepancy and gamma = 1/(k+1)") {
    for (int k = 1; k <= 12; ++k) {
        HJString s(std::vector<int>(static_cast<std::size_t>(k), 2));
        SingularityProfile p = profile(s);
        CHECK(p.order == Integer(k + 1));
        for (const auto& a : p.discrepancies) CHECK(a == Rational(0));
        CHECK(p.d_squared == Rational(0));
        CHECK(p.gamma == Rational(1, k + 1));
    }
}

TEST_CASE("sum identities for lengths 2 and 3") {
    for (const auto& s : oracle::all_strings(3, 24)) {
        auto a = solve_discrepancies(s);
        Rational lhs;
        for (std::size_t j = 0; j < 3; ++j) lhs += a[j] * Rational(s.entries()[j] - 2);
        Rational rhs = Rational(s.sum() - 6) - a[0] - a[2];
        CHECK(lhs == rhs);
    }
    for (const auto& s : oracle::all_strings(2, 24)) {
        auto a = solve_discrepancies(s);
        Rational lhs;
        for (std::size_t j = 0; j < 2; ++j) lhs += a[j] * Rational(s.entries()[j] - 2);
        Rational rhs = Rational(s.sum() - 4) - a[0] - a[1];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("threshold behavior: large strings fall below -1/2") {
    const Rational bound(-1, 2);
    for (const auto& s : oracle::all_strings(3, 40)) {
        if (s.sum() >= 10) CHECK(contribution(s) < bound);
    }
    for (const auto& s : oracle::all_strings(2, 40)) {
        if (s.sum() >= 8) CHECK(contribution(s) < bound);
    }
}

TEST_CASE("length-1 closed form") {
    for (int d = 2; d <= 1000; ++d) {
        HJString s({d});
        CHECK(solve_discrepancies(s) == std::vector<Rational>{Rational(d - 2, d)});
        Rational expected(3 - (d - 2) * (d - 2), 3 * d);
        CHECK(contribution(s) == expected);
    }
    CHECK(contribution(make({2})) == rat("1/2"));
    CHECK(contribution(make({3})) == rat("2/9"));
    for (int d = 4; d <= 1000; ++d) {
        CHECK(contribution(HJString({d})) <= rat("-1/12"));
    }
}

TEST_CASE("leading principal minors alternate in sign") {
    auto check_minors = [](const HJString& s) {
        IntersectionMatrix m(s);
        for (int i = 1; i <= m.size(); ++i) {
            Integer minor = m.leading_minor(i);
            if (i % 2 == 0) {
                CHECK(minor > 0);
            } else {
                CHECK(minor < 0);
            }
        }
        // and the full determinant matches the continuant up to sign
        Integer full = m.leading_minor(m.size());
        CHECK((full < 0 ? Integer(-full) : full) == continuant(s));
    };
    for (int length = 1; length <= 3; ++length) {
        for (const auto& s : oracle::all_strings(length, 20)) check_minors(s);
    }
    check_minors(make({2, 3, 4, 5, 2, 2, 3, 2}));
}

TEST_CASE("profiles are pure: concurrent evaluation matches serial") {
    std::vector<HJString> inputs;
    for (const auto& s : oracle::all_strings(3, 16)) inputs.push_back(s);
    std::vector<SingularityProfile> serial;
    serial.reserve(inputs.size());
    for (const auto& s : inputs) serial.push_back(profile(s));

    const int workers = 8;
    std::vector<std::future<std::vector<SingularityProfile>>> futures;
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&inputs] {
            std::vector<SingularityProfile> out;
            out.reserve(inputs.size());
            for (const auto& s : inputs) out.push_back(profile(s));
            return out;
        }));
    }
    for (auto& f : futures) CHECK(f.get() == serial);
}

TEST_CASE("discrepancies always lie in [0,1)") {
    for (int length = 1; length <= 3; ++length) {
        for (const auto& s : oracle::all_strings(length, 30)) {
            for (const auto& a : solve_discrepancies(s)) {
                CHECK(a >= Rational(0));
                CHECK(a < Rational(1));
            }
        }
    }
}
