#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "domainlab/trees.hpp"
#include "fixtures.hpp"

using namespace domainlab;

namespace {

Tree fig2() {
    std::vector<std::string> labels;
    const Graph g = load_graph_file(fixtures::data_path("fig2.tree"), &labels);
    return Tree(g);
}

std::vector<std::string> fig2_labels() {
    std::vector<std::string> labels;
    load_graph_file(fixtures::data_path("fig2.tree"), &labels);
    return labels;
}

AltId id_in(const std::vector<std::string>& labels, const std::string& l) {
    return static_cast<AltId>(
        std::find(labels.begin(), labels.end(), l) - labels.begin());
}

}  // namespace

TEST_CASE("paths on the line and the star") {
    const Tree l6 = line_tree(6);
    CHECK(path(l6, 1, 4) == std::vector<AltId>{1, 2, 3, 4});  // a2..a5
    CHECK(path(l6, 3, 3) == std::vector<AltId>{3});
    const Domain d3 = fixtures::table3();
    const Tree star = fixtures::fig6_tree(d3);
    CHECK(path(star, *d3.id_of("a"), *d3.id_of("d")) ==
          std::vector<AltId>{*d3.id_of("a"), *d3.id_of("b"), *d3.id_of("d")});
    CHECK(path(l6, 4, 1) == std::vector<AltId>{4, 3, 2, 1});
}

TEST_CASE("projection") {
    const Tree l6 = line_tree(6);
    CHECK(project(l6, 2, vector_to_set({2, 3, 4})) == 2);    // a in B
    CHECK(project(l6, 0, vector_to_set({2, 3, 4})) == 2);    // entry vertex
    CHECK_THROWS(project(l6, 0, vector_to_set({2, 4})));     // not path-closed
    CHECK_THROWS(project(l6, 0, VertexSet{0}));              // empty
    const Domain d3 = fixtures::table3();
    const Tree star = fixtures::fig6_tree(d3);
    CHECK(project(star, *d3.id_of("c"),
                  vector_to_set({*d3.id_of("a"), *d3.id_of("b")})) == *d3.id_of("b"));
}

TEST_CASE("minimal subtree") {
    const Tree l6 = line_tree(6);
    CHECK(minimal_subtree(l6, {0, 5}) == vector_to_set({0, 1, 2, 3, 4, 5}));
    CHECK(minimal_subtree(l6, {3}) == singleton(3));
    const Domain d3 = fixtures::table3();
    const Tree star = fixtures::fig6_tree(d3);
    const auto id = [&](const char* l) { return *d3.id_of(l); };
    CHECK(minimal_subtree(star, {id("a"), id("c"), id("d")}) ==
          vector_to_set({id("a"), id("b"), id("c"), id("d")}));
}

TEST_CASE("side sets") {
    const Tree l6 = line_tree(6);
    CHECK(side_set(l6, 1, 4) == vector_to_set({0, 1}));
    CHECK(side_set(l6, 0, 1) == singleton(0));  // leaf side of an edge
    CHECK_THROWS(side_set(l6, 2, 2));
}

TEST_CASE("fig 2 structural facts") {
    const Tree t = fig2();
    const auto labels = fig2_labels();
    const AltId x = id_in(labels, "x"), a = id_in(labels, "a");
    const AltId b = id_in(labels, "b"), y = id_in(labels, "y");
    CHECK(is_dual_thresholds(t, a, b));
    CHECK(!is_dual_thresholds(t, x, y));
    // a's side holds x and the hanging branches
    const VertexSet sa = side_set(t, a, b);
    const VertexSet expected =
        vector_to_set({a, x, id_in(labels, "j"), id_in(labels, "u1"),
                       id_in(labels, "u2"), id_in(labels, "l0"), id_in(labels, "l1"),
                       id_in(labels, "l2")});
    CHECK(sa == expected);
    // x is a leaf of its side subtree, y is not
    const VertexSet sx = side_set(t, x, y);
    int deg_x = 0;
    for (AltId w : t.graph().neighbors(x))
        if (in_set(sx, w)) ++deg_x;
    CHECK(deg_x == 1);
    const VertexSet sy = side_set(t, y, x);
    int deg_y = 0;
    for (AltId w : t.graph().neighbors(y))
        if (in_set(sy, w)) ++deg_y;
    CHECK(deg_y == 2);
}

TEST_CASE("dual thresholds basics") {
    const Tree l6 = line_tree(6);
    for (auto [u, v] : l6.edges()) CHECK(is_dual_thresholds(l6, u, v));
    CHECK(is_dual_thresholds(l6, 0, 5));  // line endpoints
    const Domain d1 = fixtures::table1();
    const Tree fig3 = fixtures::fig3_tree(d1);
    // a3 hangs off a4, the interior of the a2..a5 path, so (a2, a5) are
    // dual-thresholds in L^6 but not in the figure 3 tree
    CHECK(is_dual_thresholds(l6, 1, 4));
    CHECK(!is_dual_thresholds(fig3, *d1.id_of("a2"), *d1.id_of("a5")));
    CHECK(is_dual_thresholds(fig3, *d1.id_of("a1"), *d1.id_of("a4")));
}

TEST_CASE("leaves") {
    const Domain d1 = fixtures::table1();
    const Tree fig3 = fixtures::fig3_tree(d1);
    CHECK(leaves(fig3.graph()) ==
          std::vector<AltId>{*d1.id_of("a1"), *d1.id_of("a3"), *d1.id_of("a6")});
    const Graph cycle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(leaves(cycle).empty());
    const Domain d3 = fixtures::table3();
    const Tree star = fixtures::fig6_tree(d3);
    CHECK(leaves(star.graph()) ==
          std::vector<AltId>{*d3.id_of("a"), *d3.id_of("c"), *d3.id_of("d")});
}

TEST_CASE("tree enumeration counts and uniqueness") {
    CHECK(tree_count(2) == 1);
    CHECK(tree_count(3) == 3);
    CHECK(tree_count(4) == 16);
    for (int m = 2; m <= 5; ++m) {
        std::set<std::vector<std::pair<AltId, AltId>>> seen;
        const auto visited = enumerate_trees(m, [&](const Tree& t) {
            seen.insert(t.edges());
            return true;
        });
        CHECK(visited == tree_count(m));
        CHECK(seen.size() == tree_count(m));
    }
    CHECK_THROWS(enumerate_trees(9, [](const Tree&) { return true; }));
}

TEST_CASE("path symmetry and side partition properties") {
    std::mt19937 rng(11);
    enumerate_trees(6, [&](const Tree& t) {
        const AltId x = static_cast<AltId>(rng() % 6);
        AltId y = static_cast<AltId>(rng() % 6);
        if (y == x) y = (y + 1) % 6;
        auto fwd = path(t, x, y);
        auto bwd = path(t, y, x);
        std::reverse(bwd.begin(), bwd.end());
        CHECK(fwd == bwd);
        CHECK((side_set(t, x, y) & side_set(t, y, x)) == 0);
        if (t.graph().has_edge(x, y)) {
            CHECK((side_set(t, x, y) | side_set(t, y, x)) == VertexSet{(1u << 6) - 1});
        }
        // dual-thresholds iff every off-path vertex projects to an endpoint
        const VertexSet interval = path_set(t, x, y);
        bool all_ends = true;
        for (AltId c = 0; c < 6; ++c) {
            if (in_set(interval, c)) continue;
            const AltId p = project(t, c, interval);
            if (p != x && p != y) all_ends = false;
        }
        CHECK(is_dual_thresholds(t, x, y) == all_ends);
        return true;
    });
}

TEST_CASE("graph file parsing and DOT export") {
    const Domain d1 = fixtures::table1();
    const Tree fig3 = fixtures::fig3_tree(d1);
    const std::string dot = to_dot(fig3.graph(), d1.labels());
    CHECK(dot ==
          "graph G {\n"
          "  \"a1\";\n  \"a2\";\n  \"a3\";\n  \"a4\";\n  \"a5\";\n  \"a6\";\n"
          "  \"a1\" -- \"a2\";\n"
          "  \"a2\" -- \"a4\";\n"
          "  \"a3\" -- \"a4\";\n"
          "  \"a4\" -- \"a5\";\n"
          "  \"a5\" -- \"a6\";\n"
          "}\n");
    CHECK_THROWS_AS(parse_graph("edge: a\n", nullptr), ParseError);
    CHECK_THROWS_AS(
        parse_graph("alternatives: a b\nedge: a c\n", nullptr, nullptr), ParseError);
}
