#include "hjcert/rdp.hpp"

#include <doctest.h>

#include <set>

using namespace hjcert;

TEST_CASE("ADE determinants: closed forms vs intersection matrices") {
    CHECK(ade_det({ADEFamily::A, 4}) == Integer(5));
    CHECK(ade_det({ADEFamily::E, 8}) == Integer(1));
    CHECK(ade_det({ADEFamily::E, 7}) == Integer(2));
    CHECK(ade_det({ADEFamily::E, 6}) == Integer(3));
    CHECK(ade_det({ADEFamily::D, 5}) == Integer(4));
    CHECK(ade_det({ADEFamily::A, 1}) == Integer(2));

    for (int n = 1; n <= 8; ++n) {
        CHECK(ade_intersection_det({ADEFamily::A, n}) == Integer(n + 1));
    }
    for (int n = 4; n <= 8; ++n) {
        CHECK(ade_intersection_det({ADEFamily::D, n}) == Integer(4));
    }
    CHECK(ade_intersection_det({ADEFamily::E, 6}) == Integer(3));
    CHECK(ade_intersection_det({ADEFamily::E, 7}) == Integer(2));
    CHECK(ade_intersection_det({ADEFamily::E, 8}) == Integer(1));

    CHECK_THROWS_AS(ade_det({ADEFamily::D, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ade_det({ADEFamily::E, 5}), std::invalid_argument);
    CHECK_THROWS_AS(ade_det({ADEFamily::A, 0}), std::invalid_argument);
}

TEST_CASE("candidate list is exactly the known seven") {
    auto candidates = enumerate_rdp_candidates();
    REQUIRE(candidates.size() == 7);

    std::set<std::pair<int, std::string>> found;
    for (const auto& c : candidates) {
        found.emplace(c.ksq, c.sum.name());
        CHECK(Integer(c.ksq) == c.m * c.m * c.sum.det());
        CHECK(c.sum.rank() == 9 - c.ksq);
    }
    std::set<std::pair<int, std::string>> expected = {
        {1, "E8"}, {2, "E7"}, {3, "E6"}, {4, "D5"}, {5, "A4"}, {6, "A1+A2"}, {8, "A1"},
    };
    CHECK(found == expected);

    // nothing at K'^2 = 7, and m = 2 only for the A1 candidate
    for (const auto& c : candidates) {
        CHECK(c.ksq != 7);
        if (c.sum.name() == "A1") {
            CHECK(c.ksq == 8);
            CHECK(c.m == 2);
        } else {
            CHECK(c.m == 1);
        }
    }
}

TEST_CASE("cross-elimination rules out exactly A1+A2 and A1") {
    auto report = cross_eliminate();
    REQUIRE(report.checks.size() == 7);

    int ruled_out = 0;
    for (const auto& check : report.checks) {
        if (check.candidate.sum.name() == "A1+A2") {
            CHECK(check.ruled_out);
            REQUIRE(check.instance.has_value());
            CHECK(check.instance->numerics.c2 == 6);
            REQUIRE(check.reason.has_value());
            auto* iv = std::get_if<InequalityViolated>(&*check.reason);
            REQUIRE(iv != nullptr);
            CHECK(iv->lhs == Rational(1));
            CHECK(iv->rhs == Rational(5, 6));  // 1/2 + 1/3
        } else if (check.candidate.sum.name() == "A1") {
            CHECK(check.ruled_out);
            REQUIRE(check.instance.has_value());
            CHECK(check.instance->numerics.c2 == 4);
            REQUIRE(check.reason.has_value());
            auto* iv = std::get_if<InequalityViolated>(&*check.reason);
            REQUIRE(iv != nullptr);
            CHECK(iv->lhs == Rational(2, 3));
            CHECK(iv->rhs == Rational(1, 2));
        } else if (check.candidate.sum.name() == "A4") {
            CHECK_FALSE(check.ruled_out);
            CHECK(check.note.find("more than 3") != std::string::npos);
        } else {
            CHECK_FALSE(check.ruled_out);
            CHECK_FALSE(check.note.empty());
        }
        if (check.ruled_out) ++ruled_out;
    }
    CHECK(ruled_out == 2);
}
