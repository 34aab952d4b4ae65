#include "doctest.h"

#include <random>

#include "domainlab/prefcore.hpp"
#include "fixtures.hpp"

using namespace domainlab;

TEST_CASE("parsing table 1 yields 6 alternatives and 12 preferences") {
    const Domain d = fixtures::table1();
    CHECK(d.m() == 6);
    CHECK(d.size() == 12);
    CHECK(d.label(0) == "a1");
    CHECK(d.pref(0).top() == 0);
    CHECK(d.pref(11).top() == 5);
}

TEST_CASE("degenerate one-alternative domain parses") {
    const Domain d = parse_domain("alternatives: a1\npref: a1\n");
    CHECK(d.m() == 1);
    CHECK(d.size() == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_domain("alternatives: a a\npref: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_domain("alternatives: a b\npref: a a\n"), ParseError);
    CHECK_THROWS_AS(
        parse_domain("alternatives: a b\npref: a b\npref: a b\n"), ParseError);
    CHECK_THROWS_AS(parse_domain("alternatives:\n"), ParseError);
    CHECK_THROWS_AS(parse_domain("pref: a b\n"), ParseError);
    CHECK_THROWS_AS(parse_domain("alternatives: a b\npref: a\n"), ParseError);
}

TEST_CASE("json domain files parse to the same domain") {
    const Domain d = parse_domain(
        R"({"alternatives":["a","b","c"],"prefs":[["a","b","c"],["c","b","a"]]})", "j",
        true);
    CHECK(d.m() == 3);
    CHECK(d.size() == 2);
    CHECK(d.pref(1).ranking() == std::vector<AltId>{2, 1, 0});
}

TEST_CASE("rank_of examples") {
    const Domain d1 = fixtures::table1();
    const auto a3 = *d1.id_of("a3");
    CHECK(rank_of(d1.pref(0), a3) == 3);  // P1 ranks a3 third
    const Domain d3 = fixtures::table3();
    CHECK(rank_of(d3.pref(8), *d3.id_of("a")) == 4);  // P9 ranks a fourth
    for (int i = 0; i < d1.size(); ++i) CHECK(rank_of(d1.pref(i), d1.pref(i).top()) == 1);
}

TEST_CASE("rank_of is a bijection onto 1..m") {
    const Domain d = fixtures::table1();
    for (const auto& p : d.prefs()) {
        std::vector<bool> seen(static_cast<size_t>(d.m()), false);
        for (AltId a = 0; a < d.m(); ++a) {
            const int r = rank_of(p, a);
            CHECK(r >= 1);
            CHECK(r <= d.m());
            CHECK(!seen[static_cast<size_t>(r - 1)]);
            seen[static_cast<size_t>(r - 1)] = true;
        }
    }
}

TEST_CASE("complete reversal") {
    const Domain d = fixtures::table1();
    CHECK(is_complete_reversal(d.pref(0), d.pref(11)));   // P1 vs P12
    CHECK(is_complete_reversal(d.pref(11), d.pref(0)));   // symmetric
    CHECK(!is_complete_reversal(d.pref(0), d.pref(0)));   // m >= 2
    CHECK(!is_complete_reversal(d.pref(0), d.pref(1)));   // both top a1
}

TEST_CASE("best_in and worst_in") {
    const Domain d = fixtures::table1();
    const auto id = [&](const char* l) { return *d.id_of(l); };
    CHECK(best_in(d.pref(1), {id("a3"), id("a4"), id("a5")}) == id("a5"));
    CHECK(best_in(d.pref(0), {id("a3")}) == id("a3"));
    CHECK(worst_in(d.pref(0), {id("a1"), id("a6")}) == id("a6"));
    CHECK(best_in(d.pref(0), std::vector<AltId>{0, 1, 2, 3, 4, 5}) == d.pref(0).top());
    CHECK_THROWS(best_in(d.pref(0), {}));

    const Domain d4 = fixtures::table4();
    CHECK(best_in(d4.pref(8), {*d4.id_of("a1"), *d4.id_of("a2")}) == *d4.id_of("a2"));
}

TEST_CASE("restrict preserves relative order") {
    const Domain d = fixtures::table1();
    const auto id = [&](const char* l) { return *d.id_of(l); };
    CHECK(restrict(d.pref(1), {id("a1"), id("a2"), id("a3")}) ==
          std::vector<AltId>{id("a1"), id("a2"), id("a3")});
    std::vector<AltId> all{0, 1, 2, 3, 4, 5};
    CHECK(restrict(d.pref(1), all) == d.pref(1).ranking());
    CHECK(restrict(d.pref(1), {id("a4")}) == std::vector<AltId>{id("a4")});
}

TEST_CASE("restrict composes along subset chains") {
    const Domain d = fixtures::table1();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& p = d.pref(static_cast<int>(rng() % d.size()));
        std::vector<AltId> big, small;
        for (AltId a = 0; a < d.m(); ++a)
            if (rng() % 2) big.push_back(a);
        if (big.empty()) continue;
        for (AltId a : big)
            if (rng() % 2) small.push_back(a);
        if (small.empty()) continue;
        const auto via_big = restrict(p, big);
        std::vector<AltId> chained;
        for (AltId a : via_big)
            if (std::find(small.begin(), small.end(), a) != small.end())
                chained.push_back(a);
        CHECK(chained == restrict(p, small));
    }
}

TEST_CASE("seconds sets") {
    const Domain d3 = fixtures::table3();
    CHECK(seconds_set(d3, *d3.id_of("a")) ==
          std::vector<AltId>{*d3.id_of("b"), *d3.id_of("d")});
    const Domain d4 = fixtures::table4();
    CHECK(seconds_set(d4, *d4.id_of("a4")) == std::vector<AltId>{*d4.id_of("a3")});
    const Domain single = parse_domain("alternatives: a b\npref: a b\n");
    CHECK(seconds_set(single, 0) == std::vector<AltId>{1});
    CHECK(seconds_set(single, 1).empty());
}
