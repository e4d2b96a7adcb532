#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sigma6/errors.hpp"

namespace sigma6 {

using Edge = std::pair<int, int>;

// Simple connected acyclic graph on n labeled vertices, 0-based ids.
// Immutable after construction; adjacency lists are kept sorted so that
// every traversal is deterministic. Degree bounds are NOT enforced here —
// the statistics layer rejects degrees above six.
class Tree {
  public:
    int order() const { return n_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int max_degree() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend Tree tree_from_edge_list(const std::vector<Edge>& edges, int n);
    friend Tree tree_from_parent_array(std::span<const int> parent);

  private:
    Tree(int n, std::vector<std::vector<int>> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Validates and builds a tree. Throws Error with one of:
//   VertexOutOfRange, DuplicateEdge, CycleDetected, Disconnected, InvalidInput.
Tree tree_from_edge_list(const std::vector<Edge>& edges, int n);

// parent[0] must be -1 and parent[v] < v for v >= 1 (preorder parent array,
// as produced by the enumerator). No validation beyond bounds.
Tree tree_from_parent_array(std::span<const int> parent);

// Edge-list text format: one edge per line, two whitespace-separated 0-based
// ids; '#' lines are comments; "# n=<count>" pins the vertex count, which is
// otherwise inferred as 1 + max id.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Tree& t);

}  // namespace sigma6
