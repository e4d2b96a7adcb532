#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigma6/penalty.hpp"
#include "sigma6/tree.hpp"

namespace sigma6 {

// The seven extremal families, one or two per residue class of n mod 6.
// tt1 is the backbone: a path v1..v_{2k+1} with four pendants on every even
// path vertex (order 6k+1); the others are derived from it by subdividing
// path edges, growing new degree-6 hubs, or (tt3ii) splicing in a degree-3
// vertex.
enum class FamilyId { tt1, tt6, tt5, tt2, tt4, tt3i, tt3ii };

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

// Orders: tt1: 6k+1, tt6: 6k+6, tt5: 6k+5, tt2: 6k+2, tt4: 6k+4,
// tt3i/tt3ii: 6k+3.
int family_order(FamilyId id, int k);

struct FamilySpec {
    FamilyId id;
    int k = 0;
    int i = -1;     // odd path index for tt6/tt2; first odd index for tt3ii
    int j = -1;     // second odd index for tt3ii
    int edge = -1;  // edge selector for tt5/tt4/tt3i (index into sorted edge list)
    int base = 0;   // base-family member selector for tt5/tt4/tt3i
};

// Deterministic builder. Throws ParamOutOfRange for parameters outside the
// family's admissible ranges and BaseFamilyEmpty where the placement range
// is empty although the order is meaningful (tt6 at k=1, tt3ii at k=2).
Tree build(const FamilySpec& spec);

// Every admissible placement, deduplicated by canonical code, sorted by code.
std::vector<Tree> family_member_trees(FamilyId id, int k);
std::vector<std::string> family_member_codes(FamilyId id, int k);

// Trees realizing the minimal penalty 10 at order 6j+6, used as the base of
// the tt5 chain. For j >= 2 this is the tt6 family; for j = 1 the placement
// range of tt6 is empty and the unique order-12 minimizer (two adjacent
// degree-6 hubs, five leaves each) is used instead.
std::vector<Tree> p10_base_trees(int j);

// Which closed-form minimizer parameter description (if any) the tree's
// edge-type counts satisfy, keyed by n mod 6. p40i is the four-hub pattern,
// p40ii the exceptional degree-3 pattern.
enum class MinimizerPattern { none, p0, p10, p20, p22, p30, p40i, p40ii };

const char* pattern_name(MinimizerPattern p);

struct PatternMatch {
    MinimizerPattern pattern = MinimizerPattern::none;
    DeciValue p{};                         // actual penalty of the tree
    bool penalty_is_closed_form = false;   // P equals the residue's closed-form value
};

// Reports the matching parameter description for trees with max degree
// exactly 6 (anything else yields pattern none); P is reported regardless.
PatternMatch verify_parameter_description(const Tree& t);

}  // namespace sigma6
