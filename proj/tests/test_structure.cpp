#include "doctest.h"

#include <algorithm>

#include "domainlab/structure.hpp"
#include "fixtures.hpp"

using namespace domainlab;

namespace {

std::vector<std::pair<AltId, AltId>> edges_of(const Domain& d,
                                              std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<std::pair<AltId, AltId>> out;
    for (auto [u, v] : pairs) {
        AltId a = *d.id_of(u), b = *d.id_of(v);
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("adjacency graph of table 1 matches figure 3") {
    const Domain d = fixtures::table1();
    const Graph g = adjacency_graph(d);
    CHECK(g.edges() == edges_of(d, {{"a1", "a2"},
                                    {"a2", "a4"},
                                    {"a4", "a5"},
                                    {"a5", "a6"},
                                    {"a3", "a4"}}));
    CHECK(g.is_tree());
}

TEST_CASE("adjacency graph of table 2 is two disjoint triangles") {
    const Domain d = fixtures::table2();
    const Graph g = adjacency_graph(d);
    CHECK(g.edges() == edges_of(d, {{"a", "b"},
                                    {"a", "c"},
                                    {"b", "c"},
                                    {"x", "y"},
                                    {"x", "z"},
                                    {"y", "z"}}));
    CHECK(!g.connected());
}

TEST_CASE("adjacency graph of table 4 matches figure 7") {
    const Domain d = fixtures::table4();
    const Graph g = adjacency_graph(d);
    CHECK(g.edges() == edges_of(d, {{"a1", "a2"},
                                    {"a2", "a3"},
                                    {"a1", "a3"},
                                    {"a3", "a4"}}));
    CHECK(!g.is_tree());
}

TEST_CASE("weak adjacency contains adjacency") {
    for (const Domain& d :
         {fixtures::table1(), fixtures::table2(), fixtures::table3(), fixtures::table4()}) {
        const Graph strong = adjacency_graph(d);
        const Graph weak = weak_adjacency_graph(d);
        for (auto e : strong.edges())
            CHECK(std::find(weak.edges().begin(), weak.edges().end(), e) !=
                  weak.edges().end());
    }
    const Domain single = parse_domain("alternatives: a b c\npref: a b c\n");
    CHECK(weak_adjacency_graph(single).edges().empty());
}

TEST_CASE("weak adjacency of table 3 equals its adjacency graph") {
    // No preference in the table second-ranks the top of another peak group
    // beyond the three adjacent pairs; in particular d-top preferences
    // second-rank b and c only, so (a, d) is not even weakly adjacent.
    const Domain d = fixtures::table3();
    CHECK(weak_adjacency_graph(d).edges() == adjacency_graph(d).edges());
    const auto sd = seconds_set(d, *d.id_of("d"));
    CHECK(std::find(sd.begin(), sd.end(), *d.id_of("a")) == sd.end());
}

TEST_CASE("path connectivity") {
    CHECK(check_path_connected(fixtures::table1()));
    CHECK(!check_path_connected(fixtures::table2()));
    CHECK(check_path_connected(parse_domain("alternatives: a\npref: a\n")));
}

TEST_CASE("diversity witnesses") {
    const Domain d1 = fixtures::table1();
    CHECK(check_diversity(d1) == std::make_pair(0, 11));  // (P1, P12)
    const Domain d3 = fixtures::table3();
    CHECK(check_diversity(d3) == std::make_pair(0, 8));  // (P1, P9)
    const Domain lone = parse_domain("alternatives: a b\npref: a b\n");
    CHECK(!check_diversity(lone));
}

TEST_CASE("leaf symmetry") {
    const Domain d3 = fixtures::table3();
    const auto r3 = check_leaf_symmetry(d3);
    CHECK(!r3.holds);
    REQUIRE(!r3.reports.empty());
    CHECK(r3.reports.front().leaf == *d3.id_of("a"));
    CHECK(!r3.reports.front().holds);

    const auto r1 = check_leaf_symmetry(fixtures::table1());
    CHECK(r1.holds);
    for (const auto& rep : r1.reports) CHECK(rep.vacuous);

    const auto r4 = check_leaf_symmetry(fixtures::table4());
    CHECK(r4.holds);
    REQUIRE(r4.reports.size() == 1);
    CHECK(r4.reports.front().vacuous);
}

TEST_CASE("unique seconds") {
    const Domain d4 = fixtures::table4();
    CHECK(unique_seconds(d4) == std::make_pair(*d4.id_of("a4"), *d4.id_of("a3")));
    CHECK(!unique_seconds(fixtures::table3()));
    const Domain d1 = fixtures::table1();
    CHECK(unique_seconds(d1) == std::make_pair(*d1.id_of("a1"), *d1.id_of("a2")));
}

TEST_CASE("unidimensionality aggregation") {
    const auto r1 = check_unidimensional(fixtures::table1());
    CHECK(r1.unidimensional);
    const auto r2 = check_unidimensional(fixtures::table2());
    CHECK(!r2.unidimensional);
    CHECK(!r2.path_connected);
    const auto r3 = check_unidimensional(fixtures::table3());
    CHECK(!r3.unidimensional);
    CHECK(r3.path_connected);
    CHECK(!r3.leaf_symmetry);
    CHECK_THROWS(check_unidimensional(parse_domain("alternatives: a b\npref: a b\n")));
}

TEST_CASE("linked domains") {
    // the universal domain on 3 alternatives is linked
    CHECK(check_linked(fixtures::universal(3)) == Linked::Yes);
    // a single preference has an empty weak adjacency graph
    CHECK(check_linked(parse_domain("alternatives: a b c\npref: a b c\n")) == Linked::No);
}
