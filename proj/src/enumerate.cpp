#include "sigma6/enumerate.hpp"

namespace sigma6 {

std::vector<std::vector<int>> rooted_level_sequences(int h, int root_child_cap,
                                                     int nonroot_child_cap) {
    std::vector<std::vector<int>> out;
    if (h == 1) {
        out.push_back({0});
        return out;
    }
    LevelSeqState st(h, root_child_cap, nonroot_child_cap, h);  // no subtree cap
    auto collect = [&](std::span<const int>) {
        out.emplace_back(st.levels().begin(), st.levels().end());
    };
    detail::gen_levels(st, h, collect);
    return out;
}

EnumPlan make_enum_plan(int n, int max_degree, int target_units) {
    if (n < 1) throw Error(errc::invalid_input, "order must be >= 1");
    if (max_degree < 1) throw Error(errc::invalid_input, "max_degree must be >= 1");
    EnumPlan plan;
    plan.n = n;
    plan.max_degree = max_degree;
    if (n == 1) {
        plan.single_vertex = true;
        return plan;
    }
    if (n > 2 && max_degree < 2) return plan;

    if (target_units < 1) target_units = 1;
    // grow the prefix depth until there are enough unique-centroid units
    int k = 1;
    for (;;) {
        int depth = std::min(k, n);
        plan.uni_prefixes.clear();
        LevelSeqState st(n, max_degree, max_degree - 1, (n - 1) / 2);
        auto collect = [&](std::span<const int>) {
            auto lv = st.levels();
            plan.uni_prefixes.emplace_back(lv.begin(), lv.end());
        };
        detail::gen_levels(st, depth, collect);
        if (static_cast<int>(plan.uni_prefixes.size()) >= target_units || depth == n) break;
        ++k;
    }
    plan.prefix_len = std::min(k, n);

    if (n % 2 == 0)
        plan.halves = rooted_level_sequences(n / 2, max_degree - 1, max_degree - 1);
    return plan;
}

long long count_trees(int n, int max_degree) {
    long long c = 0;
    for_each_parent_array(n, max_degree, [&](std::span<const int>) { ++c; });
    return c;
}

}  // namespace sigma6
