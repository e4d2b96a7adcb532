#include "sigma6/canonical.hpp"

#include <algorithm>

namespace sigma6 {

std::vector<int> tree_centers(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    std::vector<int> degree(n), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) order.push_back(v);
    }
    int removed = 0;
    size_t head = 0;
    int layer_end = static_cast<int>(order.size());
    while (n - removed > 2) {
        // strip one full layer of leaves
        for (; head < static_cast<size_t>(layer_end); ++head) {
            int v = order[head];
            ++removed;
            for (int w : t.neighbors(v))
                if (--degree[w] == 1) order.push_back(w);
        }
        layer_end = static_cast<int>(order.size());
    }
    std::vector<int> centers(order.begin() + head, order.end());
    std::sort(centers.begin(), centers.end());
    return centers;
}

std::string rooted_code(const Tree& t, int root) {
    int n = t.order();
    // bottom-up over a BFS order so no recursion is needed
    std::vector<int> parent(n, -2), bfs;
    bfs.reserve(n);
    bfs.push_back(root);
    parent[root] = -1;
    for (size_t i = 0; i < bfs.size(); ++i) {
        int v = bfs[i];
        for (int w : t.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                bfs.push_back(w);
            }
    }
    std::vector<std::string> code(n);
    for (int i = n - 1; i >= 0; --i) {
        int v = bfs[i];
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (parent[w] == v) kids.push_back(std::move(code[w]));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        code[v] = std::move(s);
    }
    return code[root];
}

std::string canonical_code(const Tree& t) {
    auto centers = tree_centers(t);
    std::string best = rooted_code(t, centers[0]);
    if (centers.size() == 2) {
        std::string other = rooted_code(t, centers[1]);
        if (other < best) best = std::move(other);
    }
    return best;
}

}  // namespace sigma6
