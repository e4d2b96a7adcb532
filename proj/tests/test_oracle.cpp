#include "doctest.h"

#include <algorithm>

#include "sigma6/enumerate.hpp"
#include "sigma6/search.hpp"

using namespace sigma6;

namespace {

bool contains_vector(const std::vector<SVector>& vecs, const SSubvector& s) {
    return std::any_of(vecs.begin(), vecs.end(), [&](const SVector& v) { return v.s.m == s.m; });
}

SSubvector sv(std::initializer_list<std::pair<std::pair<int, int>, std::int64_t>> entries) {
    SSubvector s;
    for (const auto& [pr, v] : entries) s.set(pr.first, pr.second, v);
    return s;
}

// A degree-5 vertex joined to four 2-chains ending in degree-6 hubs plus one
// direct hub, all hub slots filled with leaves: order 35, penalty exactly
// 4*7.6 + 9.6 = 40.0. Demonstrates that the n5-exclusion at budget 40 cannot
// hold for n = 5 (mod 6).
Tree degree5_witness_35() {
    std::vector<Edge> e;
    for (int two = 1; two <= 4; ++two) e.emplace_back(0, two);      // (2,5) edges
    for (int two = 1; two <= 4; ++two) e.emplace_back(two, 4 + two);  // (2,6) edges
    e.emplace_back(0, 9);                                            // (5,6) edge
    int leaf = 10;
    for (int hub = 5; hub <= 9; ++hub)
        for (int t = 0; t < 5; ++t) e.emplace_back(hub, leaf++);
    return tree_from_edge_list(e, 35);
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("zero budget leaves only the all-zero vector") {
        auto vecs = feasible_s_vectors(13, DeciValue{0});
        REQUIRE(vecs.size() == 1);
        CHECK(vecs[0].s.total() == 0);
        CHECK(vecs[0].m16 == 10);
        CHECK(vecs[0].m26 == 2);
        CHECK(vecs[0].nd[1] == 10);
        CHECK(vecs[0].nd[2] == 1);
        CHECK(vecs[0].nd[6] == 2);

        // no all-zero solution at orders not 1 (mod 6)
        CHECK(feasible_s_vectors(14, DeciValue{0}).empty());
    }

    TEST_CASE("order 12 at budget 10") {
        auto vecs = feasible_s_vectors(12, DeciValue{100});
        CHECK(contains_vector(vecs, sv({{{6, 6}, 1}})));
        for (const auto& v : vecs) CHECK(v.nd[5] == 0);
    }

    TEST_CASE("order 21 at budget 40") {
        auto vecs = feasible_s_vectors(21, DeciValue{400});
        CHECK(contains_vector(vecs, sv({{{2, 3}, 2}, {{3, 6}, 1}})));
        CHECK_FALSE(contains_vector(vecs, sv({{{6, 6}, 4}})));  // would force m26 = -2

        auto e1 = std::find_if(vecs.begin(), vecs.end(), [&](const SVector& v) {
            return v.s.m[2][3] == 2 && v.s.m[3][6] == 1;
        });
        REQUIRE(e1 != vecs.end());
        CHECK(e1->m16 == 15);
        CHECK(e1->m26 == 2);
        CHECK(e1->p_tenths == 400);
    }

    TEST_CASE("order 15: the exceptional pattern needs a parallel edge") {
        // handshake rows alone admit the pattern; the simple-graph bounds
        // reject it (two (2,3)-edges between one degree-2 and one degree-3
        // vertex), and indeed no tree of order 15 realizes it
        SSubvector e1 = sv({{{2, 3}, 2}, {{3, 6}, 1}});
        CHECK(contains_vector(feasible_s_vectors(15, DeciValue{400}, FeasibilityMode::handshake_only), e1));
        CHECK_FALSE(contains_vector(feasible_s_vectors(15, DeciValue{400}), e1));
        // nothing within budget 40 is feasible at order 15 under the bounds
        CHECK(feasible_s_vectors(15, DeciValue{400}).empty());
    }

    TEST_CASE("large-order admissions") {
        auto vecs = feasible_s_vectors(27, DeciValue{400});
        CHECK(contains_vector(vecs, sv({{{6, 6}, 4}})));
        CHECK(contains_vector(vecs, sv({{{2, 3}, 2}, {{3, 6}, 1}})));
        for (const auto& v : vecs) CHECK((v.p_tenths <= 300 || v.p_tenths == 400));
    }

    TEST_CASE("oracle soundness: every real tree's S-vector is admitted") {
        for (int n = 7; n <= 12; ++n) {
            for_each_parent_array(n, 6, [&](std::span<const int> par) {
                Tree t = tree_from_parent_array(par);
                if (t.max_degree() != 6) return;
                EdgeTypeCounts ec = edge_type_counts(t);
                DeciValue p = penalty(ec);
                auto vecs = feasible_s_vectors(n, p);
                CHECK(contains_vector(vecs, SSubvector::from_counts(ec)));
            });
        }
    }

    TEST_CASE("exclusion replay: every rule except the degree-5 budget-40 claim") {
        LemmaReplayReport rep = replay_exclusion_lemmas(7, 60, DeciValue{400});
        for (const auto& item : rep.items) {
            if (item.id == "no5-upto-40") continue;
            INFO(item.id);
            CHECK(item.violations.empty());
        }
    }

    TEST_CASE("the degree-5 exclusion at budget 40 is genuinely false at n = 5 (mod 6)") {
        LemmaReplayReport rep = replay_exclusion_lemmas(7, 60, DeciValue{400});
        auto item = std::find_if(rep.items.begin(), rep.items.end(),
                                 [](const LemmaItemResult& it) { return it.id == "no5-upto-40"; });
        REQUIRE(item != rep.items.end());

        std::vector<std::int64_t> orders;
        for (const auto& viol : item->violations) {
            orders.push_back(viol.n);
            CHECK(viol.n % 6 == 5);
            CHECK(viol.vec.p_tenths == 400);
            CHECK(viol.vec.s.m[2][5] == 4);
            CHECK(viol.vec.s.m[5][6] == 1);
        }
        CHECK(orders == std::vector<std::int64_t>{35, 41, 47, 53, 59});

        // and the counterexample is tree-realizable, not an oracle artifact
        Tree witness = degree5_witness_35();
        CHECK(witness.order() == 35);
        CHECK(witness.max_degree() == 6);
        DegreeCounts dc = degree_counts(witness);
        CHECK(dc[5] == 1);
        EdgeTypeCounts ec = edge_type_counts(witness);
        CHECK(ec.get(2, 5) == 4);
        CHECK(ec.get(5, 6) == 1);
        CHECK(penalty(ec) == DeciValue::parse("40.0"));
        CHECK(sigma(witness) == c_of_n(35) - 40);
    }

    TEST_CASE("handshake-only mode admits spurious vectors the bounds reject") {
        LemmaReplayReport rep =
            replay_exclusion_lemmas(7, 30, DeciValue{400}, FeasibilityMode::handshake_only);
        // a (4,4)-edge with a single degree-4 vertex sneaks in at n = 2 (mod 6)
        auto no4 = std::find_if(rep.items.begin(), rep.items.end(),
                                [](const LemmaItemResult& it) { return it.id == "no4-below-30"; });
        REQUIRE(no4 != rep.items.end());
        bool found = false;
        for (const auto& viol : no4->violations)
            if (viol.n == 20 && viol.vec.s.m[4][4] == 1 && viol.vec.s.m[4][6] == 2) found = true;
        CHECK(found);

        LemmaReplayReport bounded = replay_exclusion_lemmas(7, 30, DeciValue{400});
        auto no4b = std::find_if(bounded.items.begin(), bounded.items.end(),
                                 [](const LemmaItemResult& it) { return it.id == "no4-below-30"; });
        CHECK(no4b->violations.empty());
    }

    TEST_CASE("replay input validation") {
        CHECK_THROWS_AS(replay_exclusion_lemmas(7, 60, DeciValue{500}), Error);
        CHECK_THROWS_AS(replay_exclusion_lemmas(10, 7, DeciValue{400}), Error);
        CHECK_THROWS_AS(feasible_s_vectors(1, DeciValue{100}), Error);
    }
}
