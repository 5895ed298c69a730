// oracles.hpp — independent test-side oracles. Everything here is kept
// deliberately naive and separate from the library's implementation paths.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "treecenters/tree.hpp"

namespace oracles {

// Number of subtrees containing each vertex, by enumerating all connected
// vertex subsets. n <= 20.
std::vector<long long> subtree_counts_brute(const treecenters::Tree& t);

// Max simultaneous calls through v: pairs of endpoints from distinct
// branches at v, pairwise endpoint-disjoint, relaying free. Backtracking.
int switchboard_brute(const treecenters::Tree& t, int v);

// Canonical forms of all labeled trees on n vertices decoded from every
// Prüfer sequence; the set size is the free-tree count. The encoding matches
// treecenters::canonical_form byte for byte.
std::unordered_set<std::string> prufer_forms(int n);
std::uint64_t prufer_count(int n);

// Rooted tree counts r(1..N) via the divisor-sum recurrence, and free tree
// counts via Otter's dissimilarity formula.
std::vector<long long> rooted_tree_counts(int n_max);
std::vector<long long> free_tree_counts(int n_max);

}  // namespace oracles
