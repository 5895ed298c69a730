// enumerate.hpp — streaming generation of all non-isomorphic free trees,
// with optional diameter filtering and worker partitioning, plus canonical
// forms (AHU level sequences).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "treecenters/tree.hpp"

namespace treecenters {

inline constexpr int kEnumerationCap = 24;

// Worker `index` of `count`, 0-based. Partitions split on the generator's
// first branching decision; the union over all workers is the full stream.
struct Partition {
    int index;
    int count;
};

class TreeStream {
public:
    explicit TreeStream(int n);
    TreeStream& with_diameter(int k);
    TreeStream& with_partition(Partition p);

    // Yields each isomorphism class exactly once (across all partitions
    // combined), in a deterministic order. Single consumer.
    void for_each(const std::function<void(const Tree&)>& fn) const;
    std::uint64_t count() const;

    int n() const { return n_; }
    std::optional<int> diameter_filter() const { return diam_; }
    std::optional<Partition> partition() const { return part_; }

private:
    int n_;
    std::optional<int> diam_;
    std::optional<Partition> part_;
};

TreeStream free_trees(int n);
TreeStream free_trees_with_diameter(int n, int k);

// Isomorphism-invariant encoding: one byte per vertex, the canonical rooted
// level sequence (root byte 0) rooted at the center; bicentral trees take
// the lexicographically larger of the two rootings. Equal iff isomorphic.
// Requires n <= 255.
std::string canonical_form(const Tree& t);
Tree tree_from_canonical_form(const std::string& form);
std::string render_canonical_form(const std::string& form);  // e.g. "0.1.2.1"

// Canonical rooted level sequence of the component of T - blocked containing
// `root`, rooted there (whole tree when blocked == 0).
std::string rooted_canonical_form(const Tree& t, int root, int blocked = 0);

}  // namespace treecenters
