#include "doctest.h"

#include <set>
#include <vector>

#include "oracles.hpp"
#include "sigma6/canonical.hpp"
#include "sigma6/enumerate.hpp"

using namespace sigma6;

TEST_SUITE("enumerate") {
    TEST_CASE("small counts") {
        CHECK(count_trees(1, 6) == 1);
        CHECK(count_trees(2, 6) == 1);
        CHECK(count_trees(3, 6) == 1);
        CHECK(count_trees(4, 6) == 2);
        CHECK(count_trees(7, 6) == 11);
        CHECK(count_trees(7, 2) == 1);   // only the path survives a degree-2 cap
        CHECK(count_trees(10, 2) == 1);
    }

    TEST_CASE("unbounded counts reproduce the free-tree sequence") {
        const long long expected[] = {1,    1,    1,    2,    3,    6,     11,    23,    47,
                                      106,  235,  551,  1301, 3159, 7741,  19320, 48629, 123867};
        for (int n = 1; n <= 18; ++n)
            CHECK(count_trees(n, n < 2 ? 1 : n - 1) == expected[n - 1]);
    }

    TEST_CASE("counts match the labeled brute force") {
        for (int n = 1; n <= 8; ++n)
            for (int cap : {2, 3, 4, 6, n > 1 ? n - 1 : 1})
                CHECK(count_trees(n, cap) == oracles::labeled_free_class_count(n, cap));
    }

    TEST_CASE("each class appears exactly once") {
        for (int n : {8, 9}) {
            std::vector<std::string> codes;
            for_each_parent_array(n, 6, [&](std::span<const int> par) {
                codes.push_back(canonical_code(tree_from_parent_array(par)));
            });
            std::set<std::string> unique(codes.begin(), codes.end());
            CHECK(unique.size() == codes.size());
            CHECK(unique == oracles::labeled_free_class_codes(n, 6));
        }
    }

    TEST_CASE("degree cap is honored") {
        for (int cap : {3, 4, 6}) {
            for_each_parent_array(9, cap, [&](std::span<const int> par) {
                Tree t = tree_from_parent_array(par);
                CHECK(t.max_degree() <= cap);
            });
        }
    }

    TEST_CASE("unit partition reproduces the serial sequence") {
        for (int n : {9, 12, 13}) {
            std::vector<std::vector<int>> serial;
            for_each_parent_array(n, 6, [&](std::span<const int> par) {
                serial.emplace_back(par.begin(), par.end());
            });

            EnumPlan plan = make_enum_plan(n, 6, 32);
            std::vector<std::vector<int>> concatenated;
            for (int u = 0; u < plan.units(); ++u)
                for_each_in_unit(plan, u, [&](std::span<const int> par) {
                    concatenated.emplace_back(par.begin(), par.end());
                });
            CHECK(serial == concatenated);
        }
    }

    TEST_CASE("plan is deterministic") {
        EnumPlan a = make_enum_plan(14, 6, 16);
        EnumPlan b = make_enum_plan(14, 6, 16);
        CHECK(a.uni_prefixes == b.uni_prefixes);
        CHECK(a.halves == b.halves);
    }

    TEST_CASE("bad arguments") {
        CHECK_THROWS_AS(count_trees(0, 6), Error);
        CHECK_THROWS_AS(count_trees(5, 0), Error);
    }
}
