#include "doctest.h"

#include "sigma6/canonical.hpp"
#include "sigma6/families.hpp"

using namespace sigma6;

namespace {

Tree star7() {
    std::vector<Edge> e;
    for (int v = 1; v < 7; ++v) e.emplace_back(0, v);
    return tree_from_edge_list(e, 7);
}

}  // namespace

TEST_SUITE("families") {
    TEST_CASE("backbone family") {
        Tree t1 = build({FamilyId::tt1, 1});
        CHECK(canonical_code(t1) == canonical_code(star7()));

        Tree t2 = build({FamilyId::tt1, 2});
        CHECK(t2.order() == 13);
        CHECK(t2.max_degree() == 6);
        DegreeCounts dc = degree_counts(t2);
        CHECK(dc[1] == 10);
        CHECK(dc[2] == 1);
        CHECK(dc[6] == 2);
        EdgeTypeCounts ec = edge_type_counts(t2);
        CHECK(ec.get(1, 6) == 10);
        CHECK(ec.get(2, 6) == 2);
        CHECK(penalty(ec).tenths == 0);
        CHECK(sigma(t2) == 282);
    }

    TEST_CASE("single hub-pair order and counts") {
        Tree t = build({FamilyId::tt6, 2, 3});
        CHECK(t.order() == 18);
        EdgeTypeCounts ec = edge_type_counts(t);
        CHECK(ec.get(6, 6) == 1);
        CHECK(ec.get(1, 6) == 14);
        CHECK(ec.get(2, 6) == 2);
        CHECK(penalty(ec).tenths == 100);
    }

    TEST_CASE("path subdivision family") {
        Tree t = build({FamilyId::tt2, 2, 3});
        CHECK(t.order() == 14);
        EdgeTypeCounts ec = edge_type_counts(t);
        CHECK(ec.get(2, 2) == 1);
        CHECK(ec.get(1, 6) == 10);
        CHECK(ec.get(2, 6) == 2);
        CHECK(penalty(ec).tenths == 220);
    }

    TEST_CASE("degree-three exceptional family") {
        Tree t = build({FamilyId::tt3ii, 3, 3, 5});
        CHECK(t.order() == 21);
        EdgeTypeCounts ec = edge_type_counts(t);
        CHECK(ec.get(2, 3) == 2);
        CHECK(ec.get(3, 6) == 1);
        CHECK(ec.get(1, 6) == 15);
        CHECK(ec.get(2, 6) == 2);
        CHECK(penalty(ec) == DeciValue::parse("40.0"));
        CHECK(sigma(t) == 418);
    }

    TEST_CASE("chained families") {
        for (int e = 0; e < 11; ++e) {
            Tree t = build({FamilyId::tt5, 2, -1, -1, e});
            CHECK(t.order() == 17);
            EdgeTypeCounts ec = edge_type_counts(t);
            CHECK(ec.get(6, 6) == 2);
            CHECK(ec.get(1, 6) == 14);
            CHECK(ec.get(2, 6) == 0);
            CHECK(penalty(ec).tenths == 200);
        }
        Tree t4 = build({FamilyId::tt4, 4, -1, -1, 0});
        CHECK(t4.order() == 28);
        CHECK(edge_type_counts(t4).get(6, 6) == 3);
        CHECK(penalty(edge_type_counts(t4)).tenths == 300);

        Tree t3i = build({FamilyId::tt3i, 5, -1, -1, 0});
        CHECK(t3i.order() == 33);
        CHECK(edge_type_counts(t3i).get(6, 6) == 4);
        CHECK(penalty(edge_type_counts(t3i)).tenths == 400);
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_WITH_AS(build({FamilyId::tt1, 0}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt6, 1, 3}), doctest::Contains("BaseFamilyEmpty"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt6, 2, 2}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt6, 2, 5}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt2, 1, 3}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt3ii, 2, 3, 5}), doctest::Contains("BaseFamilyEmpty"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt3ii, 3, 3, 3}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt4, 3, -1, -1, 0}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt5, 2, -1, -1, 99}), doctest::Contains("ParamOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(build({FamilyId::tt3i, 4, -1, -1, 0}), doctest::Contains("ParamOutOfRange"), Error);
    }

    TEST_CASE("member class counts") {
        CHECK(family_member_codes(FamilyId::tt1, 1).size() == 1);
        CHECK(family_member_codes(FamilyId::tt1, 4).size() == 1);
        CHECK(family_member_codes(FamilyId::tt6, 1).empty());
        CHECK(family_member_codes(FamilyId::tt6, 2).size() == 1);
        CHECK(family_member_codes(FamilyId::tt6, 3).size() == 2);
        CHECK(family_member_codes(FamilyId::tt2, 2).size() == 1);
        // the two admissible placements at k=3 are mirror images
        CHECK(family_member_codes(FamilyId::tt2, 3).size() == 1);
        CHECK(family_member_codes(FamilyId::tt3ii, 2).empty());
        CHECK(family_member_codes(FamilyId::tt3ii, 3).size() == 1);
        CHECK(family_member_codes(FamilyId::tt5, 2).size() == 1);
    }

    TEST_CASE("every admissible member hits the residue closed form") {
        auto check_family = [](FamilyId id, int k) {
            for (const auto& t : family_member_trees(id, k)) {
                CHECK(t.order() == family_order(id, k));
                CHECK(t.max_degree() == 6);
                PMinEntry closed = p_min_closed_form(t.order());
                DeciValue p = penalty(edge_type_counts(t));
                CHECK(p == closed.value);
                CHECK(10 * sigma(t) + p.tenths == 10 * c_of_n(t.order()));
            }
        };
        for (int k = 1; k <= 10; ++k) check_family(FamilyId::tt1, k);
        for (int k = 2; k <= 10; ++k) check_family(FamilyId::tt6, k);
        for (int k = 2; k <= 10; ++k) check_family(FamilyId::tt2, k);
        for (int k = 3; k <= 10; ++k) check_family(FamilyId::tt3ii, k);
        for (int k = 2; k <= 7; ++k) check_family(FamilyId::tt5, k);
        for (int k = 4; k <= 6; ++k) check_family(FamilyId::tt4, k);
        check_family(FamilyId::tt3i, 5);
    }

    TEST_CASE("builds are deterministic") {
        FamilySpec spec{FamilyId::tt3ii, 4, 3, 7};
        CHECK(canonical_code(build(spec)) == canonical_code(build(spec)));
    }

    TEST_CASE("parameter descriptions") {
        PatternMatch p0 = verify_parameter_description(build({FamilyId::tt1, 2}));
        CHECK(p0.pattern == MinimizerPattern::p0);
        CHECK(p0.penalty_is_closed_form);

        PatternMatch p20 = verify_parameter_description(build({FamilyId::tt5, 2, -1, -1, 0}));
        CHECK(p20.pattern == MinimizerPattern::p20);

        PatternMatch p10 = verify_parameter_description(p10_base_trees(1).at(0));
        CHECK(p10.pattern == MinimizerPattern::p10);

        PatternMatch p40 = verify_parameter_description(build({FamilyId::tt3ii, 3, 3, 5}));
        CHECK(p40.pattern == MinimizerPattern::p40ii);

        // wrong maximum degree: no pattern
        std::vector<Edge> p13;
        for (int v = 0; v < 12; ++v) p13.emplace_back(v, v + 1);
        PatternMatch none = verify_parameter_description(tree_from_edge_list(p13, 13));
        CHECK(none.pattern == MinimizerPattern::none);
    }
}
