#include "sigma6/families.hpp"

#include <algorithm>
#include <map>

#include "sigma6/canonical.hpp"

namespace sigma6 {

namespace {

std::string spec_str(const FamilySpec& s) {
    std::string out = std::string(family_name(s.id)) + " k=" + std::to_string(s.k);
    if (s.i >= 0) out += " i=" + std::to_string(s.i);
    if (s.j >= 0) out += " j=" + std::to_string(s.j);
    if (s.edge >= 0) out += " edge=" + std::to_string(s.edge);
    if (s.base > 0) out += " base=" + std::to_string(s.base);
    return out;
}

[[noreturn]] void out_of_range(const FamilySpec& s, const std::string& why) {
    throw Error(errc::param_out_of_range, spec_str(s) + " (" + why + ")");
}

// Backbone tree: path vertices 0..2k (path vertex v_t of the description is
// 0-based t-1), four pendants on each even path vertex.
Tree build_tt1(int k) {
    std::vector<Edge> edges;
    int n = 6 * k + 1;
    for (int v = 0; v + 1 <= 2 * k; ++v) edges.emplace_back(v, v + 1);
    int next = 2 * k + 1;
    for (int c = 1; c <= 2 * k - 1; c += 2)
        for (int t = 0; t < 4; ++t) edges.emplace_back(c, next++);
    return tree_from_edge_list(edges, n);
}

// Replace edge (a,b) by a--s--b, s = new vertex; optionally grow s into a
// degree-6 hub with four new pendants.
Tree subdivide(const Tree& t, Edge e, bool attach_four_pendants) {
    std::vector<Edge> edges;
    for (const auto& ed : t.edges())
        if (ed != e) edges.push_back(ed);
    int s = t.order();
    edges.emplace_back(e.first, s);
    edges.emplace_back(e.second, s);
    int n = t.order() + 1;
    if (attach_four_pendants) {
        for (int p = 0; p < 4; ++p) edges.emplace_back(s, n + p);
        n += 4;
    }
    return tree_from_edge_list(edges, n);
}

// Two adjacent degree-6 hubs with five leaves each: the unique order-12
// minimizer. The tt6 placement range cannot produce it at k=1.
Tree double_hub_12() {
    std::vector<Edge> edges{{0, 1}};
    for (int p = 2; p <= 6; ++p) edges.emplace_back(0, p);
    for (int p = 7; p <= 11; ++p) edges.emplace_back(1, p);
    return tree_from_edge_list(edges, 12);
}

bool odd_in_range(int i, int k) { return i % 2 == 1 && 3 <= i && i <= 2 * k - 1; }

Tree build_from_base(const FamilySpec& s, const std::vector<Tree>& bases) {
    if (bases.empty()) throw Error(errc::base_family_empty, spec_str(s));
    if (s.base < 0 || s.base >= static_cast<int>(bases.size()))
        out_of_range(s, "base index must be in [0," + std::to_string(bases.size()) + ")");
    const Tree& base = bases[s.base];
    auto edges = base.edges();
    if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
        out_of_range(s, "edge index must be in [0," + std::to_string(edges.size()) + ")");
    return subdivide(base, edges[s.edge], /*attach_four_pendants=*/true);
}

std::vector<Tree> dedup_sorted(std::vector<Tree> trees) {
    std::map<std::string, Tree> by_code;
    for (auto& t : trees) by_code.emplace(canonical_code(t), std::move(t));
    std::vector<Tree> out;
    out.reserve(by_code.size());
    for (auto& [code, t] : by_code) out.push_back(std::move(t));
    return out;
}

}  // namespace

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::tt1:   return "tt1";
        case FamilyId::tt6:   return "tt6";
        case FamilyId::tt5:   return "tt5";
        case FamilyId::tt2:   return "tt2";
        case FamilyId::tt4:   return "tt4";
        case FamilyId::tt3i:  return "tt3i";
        case FamilyId::tt3ii: return "tt3ii";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (FamilyId id : {FamilyId::tt1, FamilyId::tt6, FamilyId::tt5, FamilyId::tt2,
                        FamilyId::tt4, FamilyId::tt3i, FamilyId::tt3ii})
        if (name == family_name(id)) return id;
    return std::nullopt;
}

int family_order(FamilyId id, int k) {
    switch (id) {
        case FamilyId::tt1:   return 6 * k + 1;
        case FamilyId::tt6:   return 6 * k + 6;
        case FamilyId::tt5:   return 6 * k + 5;
        case FamilyId::tt2:   return 6 * k + 2;
        case FamilyId::tt4:   return 6 * k + 4;
        case FamilyId::tt3i:
        case FamilyId::tt3ii: return 6 * k + 3;
    }
    return 0;
}

Tree build(const FamilySpec& s) {
    switch (s.id) {
        case FamilyId::tt1: {
            if (s.k < 1) out_of_range(s, "k must be >= 1");
            return build_tt1(s.k);
        }
        case FamilyId::tt6: {
            if (s.k < 1) out_of_range(s, "k must be >= 1");
            if (s.k == 1) throw Error(errc::base_family_empty, spec_str(s) + " (no odd i with 3 <= i <= 1)");
            if (!odd_in_range(s.i, s.k)) out_of_range(s, "need odd i with 3 <= i <= 2k-1");
            return subdivide(build_tt1(s.k), {s.i - 1, s.i}, /*attach_four_pendants=*/true);
        }
        case FamilyId::tt2: {
            if (s.k < 2) out_of_range(s, "k must be >= 2");
            if (!odd_in_range(s.i, s.k)) out_of_range(s, "need odd i with 3 <= i <= 2k-1");
            return subdivide(build_tt1(s.k), {s.i - 1, s.i}, /*attach_four_pendants=*/false);
        }
        case FamilyId::tt3ii: {
            if (s.k < 2) out_of_range(s, "k must be >= 2");
            if (s.k == 2) throw Error(errc::base_family_empty, spec_str(s) + " (no odd pair i < j in {3})");
            if (!odd_in_range(s.i, s.k) || !odd_in_range(s.j, s.k) || s.i >= s.j)
                out_of_range(s, "need odd i < j with 3 <= i < j <= 2k-1");
            Tree t1 = build_tt1(s.k);
            // delete v_{i-1}v_i and v_{j-1}v_j, join both loose odd vertices
            // and v_{i-1} to a new degree-3 vertex, new leaf on v_{j-1}
            int vi = s.i - 1, vj = s.j - 1;  // 0-based odd path vertices
            std::vector<Edge> edges;
            for (const auto& e : t1.edges())
                if (e != Edge{vi - 1, vi} && e != Edge{vj - 1, vj}) edges.push_back(e);
            int sv = t1.order(), leaf = t1.order() + 1;
            edges.emplace_back(vi - 1, sv);
            edges.emplace_back(vi, sv);
            edges.emplace_back(vj, sv);
            edges.emplace_back(vj - 1, leaf);
            return tree_from_edge_list(edges, t1.order() + 2);
        }
        case FamilyId::tt5: {
            if (s.k < 2) out_of_range(s, "k must be >= 2");
            return build_from_base(s, p10_base_trees(s.k - 1));
        }
        case FamilyId::tt4: {
            if (s.k < 4) out_of_range(s, "k must be >= 4");
            return build_from_base(s, family_member_trees(FamilyId::tt5, s.k - 1));
        }
        case FamilyId::tt3i: {
            if (s.k < 5) out_of_range(s, "k must be >= 5");
            return build_from_base(s, family_member_trees(FamilyId::tt4, s.k - 1));
        }
    }
    throw Error(errc::invalid_input, "unreachable");
}

std::vector<Tree> p10_base_trees(int j) {
    if (j < 1) throw Error(errc::param_out_of_range, "p10 base needs k >= 1");
    if (j == 1) return {double_hub_12()};
    return family_member_trees(FamilyId::tt6, j);
}

std::vector<Tree> family_member_trees(FamilyId id, int k) {
    std::vector<Tree> out;
    switch (id) {
        case FamilyId::tt1: {
            if (k < 1) throw Error(errc::param_out_of_range, "tt1 needs k >= 1");
            out.push_back(build_tt1(k));
            return out;
        }
        case FamilyId::tt6: {
            if (k < 1) throw Error(errc::param_out_of_range, "tt6 needs k >= 1");
            for (int i = 3; i <= 2 * k - 1; i += 2)
                out.push_back(build({FamilyId::tt6, k, i}));
            return dedup_sorted(std::move(out));
        }
        case FamilyId::tt2: {
            if (k < 2) throw Error(errc::param_out_of_range, "tt2 needs k >= 2");
            for (int i = 3; i <= 2 * k - 1; i += 2)
                out.push_back(build({FamilyId::tt2, k, i}));
            return dedup_sorted(std::move(out));
        }
        case FamilyId::tt3ii: {
            if (k < 2) throw Error(errc::param_out_of_range, "tt3ii needs k >= 2");
            for (int i = 3; i <= 2 * k - 1; i += 2)
                for (int j = i + 2; j <= 2 * k - 1; j += 2)
                    out.push_back(build({FamilyId::tt3ii, k, i, j}));
            return dedup_sorted(std::move(out));
        }
        case FamilyId::tt5:
        case FamilyId::tt4:
        case FamilyId::tt3i: {
            int min_k = id == FamilyId::tt5 ? 2 : id == FamilyId::tt4 ? 4 : 5;
            if (k < min_k)
                throw Error(errc::param_out_of_range,
                            std::string(family_name(id)) + " needs k >= " + std::to_string(min_k));
            std::vector<Tree> bases = id == FamilyId::tt5 ? p10_base_trees(k - 1)
                                    : id == FamilyId::tt4 ? family_member_trees(FamilyId::tt5, k - 1)
                                                          : family_member_trees(FamilyId::tt4, k - 1);
            for (const auto& base : bases)
                for (const auto& e : base.edges())
                    out.push_back(subdivide(base, e, /*attach_four_pendants=*/true));
            return dedup_sorted(std::move(out));
        }
    }
    throw Error(errc::invalid_input, "unreachable");
}

std::vector<std::string> family_member_codes(FamilyId id, int k) {
    std::vector<std::string> codes;
    for (const auto& t : family_member_trees(id, k)) codes.push_back(canonical_code(t));
    return codes;  // already sorted: members are sorted by code
}

const char* pattern_name(MinimizerPattern p) {
    switch (p) {
        case MinimizerPattern::none:  return "none";
        case MinimizerPattern::p0:    return "p0";
        case MinimizerPattern::p10:   return "p10";
        case MinimizerPattern::p20:   return "p20";
        case MinimizerPattern::p22:   return "p22";
        case MinimizerPattern::p30:   return "p30";
        case MinimizerPattern::p40i:  return "p40i";
        case MinimizerPattern::p40ii: return "p40ii";
    }
    return "?";
}

PatternMatch verify_parameter_description(const Tree& t) {
    PatternMatch res;
    if (t.max_degree() != 6) return res;

    EdgeTypeCounts ec = edge_type_counts(t);
    res.p = penalty(ec);
    std::int64_t n = t.order();
    PMinEntry closed = p_min_closed_form(n);
    res.penalty_is_closed_form = (res.p == closed.value);

    // expected (m16, m26) and the single nonzero S entries per pattern
    auto matches = [&](std::int64_t m16_num, std::int64_t m26_num,
                       std::initializer_list<std::pair<std::pair<int, int>, std::int64_t>> s_entries) {
        if (m16_num % 3 || m26_num % 3) return false;
        if (ec.get(1, 6) != m16_num / 3 || ec.get(2, 6) != m26_num / 3) return false;
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j) {
                if (!pair_in_s(i, j)) continue;
                std::int64_t want = 0;
                for (const auto& [pr, v] : s_entries)
                    if (pr.first == i && pr.second == j) want = v;
                if (ec.get(i, j) != want) return false;
            }
        return true;
    };

    switch (n % 6) {
        case 1:
            if (matches(2 * n + 4, n - 7, {})) res.pattern = MinimizerPattern::p0;
            break;
        case 0:
            if (matches(2 * n + 6, n - 12, {{{6, 6}, 1}})) res.pattern = MinimizerPattern::p10;
            break;
        case 5:
            if (matches(2 * n + 8, n - 17, {{{6, 6}, 2}})) res.pattern = MinimizerPattern::p20;
            break;
        case 2:
            if (matches(2 * n + 2, n - 8, {{{2, 2}, 1}})) res.pattern = MinimizerPattern::p22;
            break;
        case 4:
            if (matches(2 * n + 10, n - 22, {{{6, 6}, 3}})) res.pattern = MinimizerPattern::p30;
            break;
        case 3:
            if (matches(2 * n + 12, n - 27, {{{6, 6}, 4}}))
                res.pattern = MinimizerPattern::p40i;
            else if (matches(2 * n + 3, n - 15, {{{2, 3}, 2}, {{3, 6}, 1}}))
                res.pattern = MinimizerPattern::p40ii;
            break;
    }
    return res;
}

}  // namespace sigma6
