#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "sigma6/enumerate.hpp"
#include "sigma6/stats.hpp"
#include "sigma6/tree.hpp"

using namespace sigma6;

namespace {

Tree star(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return tree_from_edge_list(e, n);
}

Tree path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return tree_from_edge_list(e, n);
}

}  // namespace

TEST_SUITE("tree") {
    TEST_CASE("smallest trees") {
        Tree p2 = tree_from_edge_list({{0, 1}}, 2);
        CHECK(p2.order() == 2);
        CHECK(p2.max_degree() == 1);

        Tree s7 = star(7);
        CHECK(s7.order() == 7);
        CHECK(s7.degree(0) == 6);
        CHECK(s7.max_degree() == 6);

        Tree k1 = tree_from_edge_list({}, 1);
        CHECK(k1.order() == 1);
        CHECK(k1.max_degree() == 0);
    }

    TEST_CASE("rejects non-trees") {
        CHECK_THROWS_WITH_AS(tree_from_edge_list({{0, 1}, {1, 2}, {2, 0}}, 3), doctest::Contains("CycleDetected"),
                             Error);
        CHECK_THROWS_WITH_AS(tree_from_edge_list({{0, 0}}, 2), doctest::Contains("CycleDetected"), Error);
        CHECK_THROWS_WITH_AS(tree_from_edge_list({{0, 1}, {0, 1}, {2, 3}}, 4),
                             doctest::Contains("DuplicateEdge"), Error);
        CHECK_THROWS_WITH_AS(tree_from_edge_list({{0, 5}}, 2), doctest::Contains("VertexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(tree_from_edge_list({{0, 1}, {2, 3}}, 5), doctest::Contains("Disconnected"),
                             Error);
        CHECK_THROWS_AS(tree_from_edge_list({}, 0), Error);
    }

    TEST_CASE("degree counts") {
        DegreeCounts p2 = degree_counts(tree_from_edge_list({{0, 1}}, 2));
        CHECK(p2[1] == 2);
        CHECK(p2[2] == 0);
        CHECK(p2.identities_hold());

        DegreeCounts s7 = degree_counts(star(7));
        CHECK(s7[1] == 6);
        CHECK(s7[6] == 1);
        CHECK(s7.identities_hold());

        CHECK_THROWS_WITH_AS(degree_counts(star(8)), doctest::Contains("DegreeExceedsSix"), Error);
        CHECK_THROWS_AS(edge_type_counts(star(8)), Error);
    }

    TEST_CASE("edge type counts and handshake rows") {
        EdgeTypeCounts s7 = edge_type_counts(star(7));
        CHECK(s7.get(1, 6) == 6);
        CHECK(s7.total() == 6);

        EdgeTypeCounts p3 = edge_type_counts(path(3));
        CHECK(p3.get(1, 2) == 2);

        for (int n = 2; n <= 9; ++n) {
            for_each_tree(n, 6, [&](const Tree& t) {
                DegreeCounts dc = degree_counts(t);
                EdgeTypeCounts ec = edge_type_counts(t);
                CHECK(dc.identities_hold());
                CHECK(ec.total() == n - 1);
                CHECK(handshake_rows_hold(dc, ec));
            });
        }
    }

    TEST_CASE("sigma, two routes") {
        CHECK(sigma(tree_from_edge_list({{0, 1}}, 2)) == 0);
        CHECK(sigma(star(7)) == 150);
        CHECK(sigma(path(3)) == 2);
        CHECK(sigma(star(8)) == 252);  // no degree bound on sigma itself

        for (int n = 2; n <= 9; ++n) {
            for_each_parent_array(n, n - 1, [&](std::span<const int> par) {
                Tree t = tree_from_parent_array(par);
                CHECK(sigma(t) == oracles::sigma_degree_cube_route(t));
                if (t.max_degree() <= 6) CHECK(sigma(t) == sigma_from_counts(edge_type_counts(t)));
            });
        }
    }

    TEST_CASE("edge list parsing") {
        std::istringstream in("# a star on 7 vertices\n# n=7\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n");
        Tree t = read_edge_list(in);
        CHECK(t.order() == 7);
        CHECK(t.degree(0) == 6);

        std::istringstream inferred("0 1\n1 2\n");
        CHECK(read_edge_list(inferred).order() == 3);

        std::istringstream single("# n=1\n");
        CHECK(read_edge_list(single).order() == 1);

        std::istringstream bad("0 x\n");
        CHECK_THROWS_WITH_AS(read_edge_list(bad), doctest::Contains("InvalidInput"), Error);

        std::istringstream trailing("0 1 2\n");
        CHECK_THROWS_AS(read_edge_list(trailing), Error);

        std::istringstream empty("");
        CHECK_THROWS_AS(read_edge_list(empty), Error);
    }

    TEST_CASE("edge list round trip") {
        Tree t = star(7);
        std::ostringstream out;
        write_edge_list(out, t);
        std::istringstream in(out.str());
        Tree back = read_edge_list(in);
        CHECK(back.order() == t.order());
        CHECK(back.edges() == t.edges());
    }
}
