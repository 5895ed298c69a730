// tree.hpp — labeled undirected trees, family builders, metric helpers.
//
// Vertex ids are 1-based throughout the library (adjacency slot 0 is unused);
// the labeled figures this code reproduces are all stated with 1-based ids.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treecenters {

// Bad user input (malformed edge lists, parameter ranges, enumeration caps).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical routine failed to converge within its iteration cap, or an
// expected resolution threshold could not be met.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal tripwire: a structural guarantee the library relies on was
// violated (e.g. an extremal-vertex set of size > 2, or the two
// characteristic-set methods disagreeing). Never a user error.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tree on vertices {1..n}. Exactly n-1 edges, connected, no self-loops,
// adjacency symmetric with each neighbor list sorted ascending.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj;  // size n+1, adj[0] unused

    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool valid_vertex(int v) const { return v >= 1 && v <= n; }
    bool has_edge(int u, int v) const;
    // All edges (u,v) with u < v, ordered by (u,v).
    std::vector<std::pair<int, int>> edges() const;
};

// One or two vertices; when two, they are adjacent in the owning tree.
// The result type of every center computation.
struct CentralSet {
    std::vector<int> vertices;  // sorted ascending, size 1 or 2

    bool contains(int v) const;
    bool operator==(const CentralSet&) const = default;
};

// Path-star tree P_{n-g,g}: path 1-2-...-(n-g) with g pendant leaves
// n-g+1..n attached at vertex n-g.
struct PathStarParams {
    int n;
    int g;  // star leaf count, 2 <= g <= n-3
};

// Double broom T(l,m,k): path on k vertices with l pendants at one end and
// m pendants at the other; n = l+m+k, diameter k+1.
struct DoubleBroomParams {
    int l;
    int m;
    int k;
};

Tree build_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

Tree build_path(int n);                 // 1-2-...-n
Tree build_star(int n);                 // center 1, leaves 2..n
Tree build_path_star(PathStarParams p);
// T_{n,k}: path v_1..v_{k+1} (ids 1..k+1) plus n-k-1 pendants at
// v_{floor((k+2)/2)}; diameter exactly k. Requires 3 <= k <= n-1.
Tree build_tnk(int n, int k);
// Pendants 1..l at one path end, path l+1..l+k, pendants l+k+1..n at the
// other end.
Tree build_double_broom(DoubleBroomParams p);

// BFS distances from v; entry 0 is unused (-1), entries 1..n are d(v,u).
std::vector<int> distances_from(const Tree& t, int v);
int eccentricity(const Tree& t, int v);
// Max pairwise distance, via the double BFS sweep.
int diameter(const Tree& t);

// d(A,B) = min over a in A, b in B of d(a,b).
int central_distance(const Tree& t, const std::vector<int>& a, const std::vector<int>& b);
int central_distance(const Tree& t, const CentralSet& a, const CentralSet& b);

// Connected component of T - v, reported with its own edge count
// (the branch at v through this component has edge_count + 1 edges).
struct Branch {
    std::vector<int> vertices;  // sorted ascending
    int edge_count;
};
std::vector<Branch> branches_at(const Tree& t, int v);

}  // namespace treecenters
