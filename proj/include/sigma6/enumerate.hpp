#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "sigma6/errors.hpp"
#include "sigma6/tree.hpp"

namespace sigma6 {

// Isomorphism-free generation of free trees on n vertices with all degrees
// <= max_degree, one representative per class, deterministic order, O(n)
// state. Trees are handed to the visitor as preorder parent arrays
// (parent[0] == -1, parent[v] < v).
//
// Scheme: a free tree is rooted at its centroid. Trees with a unique
// centroid correspond to canonical rooted trees whose root subtrees all have
// at most floor((n-1)/2) vertices; trees with two (adjacent) centroids exist
// only for even n and correspond to unordered pairs of rooted trees on n/2
// vertices joined at their roots. Canonical rooted trees are generated as
// level sequences with children subtrees in non-increasing lexicographic
// order; the comparison against the preceding sibling is maintained
// incrementally with a single mirror pointer (the outermost still-tied
// sibling constraint dominates every nested one).

class LevelSeqState {
  public:
    LevelSeqState(int n, int root_child_cap, int nonroot_child_cap, int root_subtree_cap)
        : n_(n),
          root_child_cap_(root_child_cap),
          nonroot_child_cap_(nonroot_child_cap),
          root_subtree_cap_(root_subtree_cap),
          lev_(n, 0),
          par_(n, -1),
          nchild_(n, 0),
          prev_(n + 1, -1) {
        prev_[0] = 0;
        undo_.reserve(n);
    }

    int placed() const { return pos_; }
    int last_level() const { return lev_[pos_ - 1]; }

    bool can_place(int d) const {
        if (d < 1 || d > lev_[pos_ - 1] + 1) return false;
        if (d == 1) {
            if (root_subtree_cap_ < 1) return false;
        } else if (size1_ + 1 > root_subtree_cap_) {
            return false;
        }
        if (active_) {
            // tied with the preceding sibling subtree: stay <= its mirror
            if (c_ == a_) {
                if (d > lev_[a_]) return false;  // exact copy consumed, must close
            } else if (d > lev_[c_]) {
                return false;
            }
        }
        int p = prev_[d - 1];
        int cap = (p == 0) ? root_child_cap_ : nonroot_child_cap_;
        return nchild_[p] < cap;
    }

    void place(int d) {
        int p = prev_[d - 1];
        undo_.push_back({prev_[d], size1_, active_, a_, c_});
        if (active_) {
            if (c_ == a_) {
                active_ = false;  // closed an exact copy of the sibling
            } else if (d == lev_[c_]) {
                ++c_;             // still tied
            } else {
                active_ = false;  // strictly smaller, constraint released
            }
        }
        if (!active_) {
            int s = prev_[d];     // previous subtree at this level, if a sibling
            if (s > p) {
                active_ = true;
                a_ = pos_;
                c_ = s + 1;
            }
        }
        lev_[pos_] = d;
        par_[pos_] = p;
        ++nchild_[p];
        prev_[d] = pos_;
        size1_ = (d == 1) ? 1 : size1_ + 1;
        ++pos_;
    }

    void unplace() {
        --pos_;
        int d = lev_[pos_];
        --nchild_[par_[pos_]];
        const Undo& u = undo_.back();
        prev_[d] = u.prev_old;
        size1_ = u.size1_old;
        active_ = u.active_old;
        a_ = u.a_old;
        c_ = u.c_old;
        undo_.pop_back();
    }

    std::span<const int> parents() const { return {par_.data(), static_cast<size_t>(pos_)}; }
    std::span<const int> levels() const { return {lev_.data(), static_cast<size_t>(pos_)}; }

  private:
    struct Undo {
        int prev_old, size1_old;
        bool active_old;
        int a_old, c_old;
    };

    int n_, root_child_cap_, nonroot_child_cap_, root_subtree_cap_;
    std::vector<int> lev_, par_, nchild_, prev_;
    std::vector<Undo> undo_;
    int pos_ = 1;      // next position to fill; position 0 is the root
    int size1_ = 0;    // size of the open root-child subtree
    bool active_ = false;
    int a_ = 0;        // start of the constrained subtree
    int c_ = 0;        // mirror position inside the preceding sibling
};

namespace detail {

template <class Visitor>
void gen_levels(LevelSeqState& st, int n, Visitor& visit) {
    if (st.placed() == n) {
        visit(st.parents());
        return;
    }
    for (int d = st.last_level() + 1; d >= 1; --d) {
        if (!st.can_place(d)) continue;
        st.place(d);
        gen_levels(st, n, visit);
        st.unplace();
    }
}

// Assemble the join of two rooted halves: A keeps its labels, B is shifted
// by h and its root is attached to A's root.
inline void join_halves(const std::vector<int>& a, const std::vector<int>& b,
                        std::vector<int>& out) {
    int h = static_cast<int>(a.size());
    out.resize(a.size() + b.size());
    std::copy(a.begin(), a.end(), out.begin());
    out[h] = 0;
    for (size_t v = 1; v < b.size(); ++v) out[h + v] = h + b[v];
}

// Rebuild a parent array from a level sequence (levels[0] == 0).
inline void levels_to_parents(std::span<const int> levels, std::vector<int>& par) {
    par.assign(levels.size(), -1);
    std::vector<int> prev(levels.size() + 1, -1);
    prev[0] = 0;
    for (size_t v = 1; v < levels.size(); ++v) {
        par[v] = prev[levels[v] - 1];
        prev[levels[v]] = static_cast<int>(v);
    }
}

}  // namespace detail

// Level sequences (positions 0..h-1, levels[0] == 0) of all canonical rooted
// trees on h vertices whose root has at most root_child_cap children and
// every other vertex at most nonroot_child_cap children.
std::vector<std::vector<int>> rooted_level_sequences(int h, int root_child_cap,
                                                     int nonroot_child_cap);

// Serial reference enumeration.
template <class Visitor>
void for_each_parent_array(int n, int max_degree, Visitor&& visit) {
    if (n < 1) throw Error(errc::invalid_input, "order must be >= 1");
    if (max_degree < 1) throw Error(errc::invalid_input, "max_degree must be >= 1");
    if (n == 1) {
        std::vector<int> par{-1};
        visit(std::span<const int>{par.data(), 1});
        return;
    }
    if (n > 2 && max_degree < 2) return;

    // unique-centroid leg
    {
        LevelSeqState st(n, max_degree, max_degree - 1, (n - 1) / 2);
        detail::gen_levels(st, n, visit);
    }
    // two-centroid leg (even n): unordered pairs of rooted halves
    if (n % 2 == 0) {
        auto halves = rooted_level_sequences(n / 2, max_degree - 1, max_degree - 1);
        std::vector<int> parA, parB, joined;
        for (size_t p = 0; p < halves.size(); ++p) {
            detail::levels_to_parents(halves[p], parA);
            for (size_t q = p; q < halves.size(); ++q) {
                detail::levels_to_parents(halves[q], parB);
                detail::join_halves(parA, parB, joined);
                visit(std::span<const int>{joined.data(), joined.size()});
            }
        }
    }
}

// Work partition for the OpenMP scan: unique-centroid subtrees are split by
// canonical level-sequence prefixes, the two-centroid leg by the index of
// the first half. Visiting units 0..units()-1 in order reproduces the serial
// visit sequence exactly.
struct EnumPlan {
    int n = 0;
    int max_degree = 0;
    int prefix_len = 0;
    std::vector<std::vector<int>> uni_prefixes;  // level-sequence prefixes, root included
    std::vector<std::vector<int>> halves;        // level sequences of rooted halves
    bool single_vertex = false;

    int units() const {
        return static_cast<int>(uni_prefixes.size() + halves.size()) + (single_vertex ? 1 : 0);
    }
};

EnumPlan make_enum_plan(int n, int max_degree, int target_units);

template <class Visitor>
void for_each_in_unit(const EnumPlan& plan, int unit, Visitor&& visit) {
    if (plan.single_vertex) {
        std::vector<int> par{-1};
        visit(std::span<const int>{par.data(), 1});
        return;
    }
    int n = plan.n;
    int uni_count = static_cast<int>(plan.uni_prefixes.size());
    if (unit < uni_count) {
        const auto& prefix = plan.uni_prefixes[unit];
        LevelSeqState st(n, plan.max_degree, plan.max_degree - 1, (n - 1) / 2);
        for (size_t v = 1; v < prefix.size(); ++v) {
            if (!st.can_place(prefix[v]))
                throw Error(errc::invalid_input, "corrupt enumeration prefix");
            st.place(prefix[v]);
        }
        if (st.placed() == n) {
            visit(st.parents());
        } else {
            detail::gen_levels(st, n, visit);
        }
        return;
    }
    size_t p = static_cast<size_t>(unit - uni_count);
    std::vector<int> parA, parB, joined;
    detail::levels_to_parents(plan.halves[p], parA);
    for (size_t q = p; q < plan.halves.size(); ++q) {
        detail::levels_to_parents(plan.halves[q], parB);
        detail::join_halves(parA, parB, joined);
        visit(std::span<const int>{joined.data(), joined.size()});
    }
}

// Convenience counter, serial.
long long count_trees(int n, int max_degree);

// Materialized stream over the same enumeration, for callers that want
// adjacency-based trees rather than parent arrays.
template <class Visitor>
void for_each_tree(int n, int max_degree, Visitor&& visit) {
    for_each_parent_array(n, max_degree,
                          [&](std::span<const int> par) { visit(tree_from_parent_array(par)); });
}

}  // namespace sigma6
