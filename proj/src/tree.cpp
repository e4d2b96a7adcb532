#include "sigma6/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sigma6 {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int Tree::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Tree tree_from_edge_list(const std::vector<Edge>& edges, int n) {
    if (n < 1) throw Error(errc::invalid_input, "vertex count must be at least 1");

    std::vector<std::vector<int>> adj(n);
    UnionFind uf(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::vertex_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw Error(errc::cycle_detected, "self-loop at vertex " + std::to_string(u));
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
            throw Error(errc::duplicate_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        if (!uf.unite(u, v))
            throw Error(errc::cycle_detected,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error(errc::disconnected,
                    std::to_string(edges.size()) + " edges for " + std::to_string(n) + " vertices");

    for (auto& a : adj) std::sort(a.begin(), a.end());
    return Tree(n, std::move(adj));
}

Tree tree_from_parent_array(std::span<const int> parent) {
    int n = static_cast<int>(parent.size());
    if (n < 1 || parent[0] != -1) throw Error(errc::invalid_input, "bad parent array");
    std::vector<std::vector<int>> adj(n);
    for (int v = 1; v < n; ++v) {
        int p = parent[v];
        if (p < 0 || p >= v) throw Error(errc::invalid_input, "bad parent array");
        adj[v].push_back(p);
        adj[p].push_back(v);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return Tree(n, std::move(adj));
}

Tree read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') {
            size_t eq = line.find("n=", i);
            if (eq != std::string::npos) {
                try {
                    declared_n = std::stoi(line.substr(eq + 2));
                } catch (const std::exception&) {
                    throw Error(errc::invalid_input, "bad n= header at line " + std::to_string(lineno));
                }
            }
            continue;
        }
        std::istringstream ls(line.substr(i));
        long long u, v;
        if (!(ls >> u >> v))
            throw Error(errc::invalid_input, "expected two integers at line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest)
            throw Error(errc::invalid_input, "trailing tokens at line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u > 1000000000 || v > 1000000000)
            throw Error(errc::vertex_out_of_range, "line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    if (n < 1) throw Error(errc::invalid_input, "empty edge list and no n= header");
    return tree_from_edge_list(edges, n);
}

Tree read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::invalid_input, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t) {
    out << "# n=" << t.order() << "\n";
    for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
}

}  // namespace sigma6
