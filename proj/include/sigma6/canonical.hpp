#pragma once

#include <string>
#include <vector>

#include "sigma6/tree.hpp"

namespace sigma6 {

// Center(s) of the tree: the one or two adjacent vertices minimizing
// eccentricity, found by peeling leaves.
std::vector<int> tree_centers(const Tree& t);

// Complete isomorphism invariant: the tree is rooted at its center and
// encoded bottom-up as a balanced-parenthesis string with children sorted;
// for bicentral trees both centers are tried and the lexicographically
// smaller string wins. Equal codes iff isomorphic.
std::string canonical_code(const Tree& t);

// Rooted encoding used by canonical_code, exposed for tests.
std::string rooted_code(const Tree& t, int root);

}  // namespace sigma6
