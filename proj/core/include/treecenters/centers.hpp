// centers.hpp — combinatorial central parts: center, centroid, median,
// telephone center, subtree core, plus the subtree-count DP and the two
// perturbation operators used by the extremal arguments.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "treecenters/tree.hpp"

namespace treecenters {

// Subtree counts f_T(v) reach 2^(n-1) scale, past 64 bits near n ~ 60.
using BigCount = boost::multiprecision::cpp_int;

enum class ScoreKind { Eccentricity, Weight, DistanceSum, Switchboard, SubtreeCount };

// Per-vertex score array, 1-based (slot 0 unused). SubtreeCount fills
// `counts`; every other kind fills `ints`.
struct VertexScores {
    ScoreKind kind;
    std::vector<long long> ints;
    std::vector<BigCount> counts;
};

std::vector<int> eccentricities(const Tree& t);
// weight(v) = max edge count over branches at v = max component size of T - v.
std::vector<int> weights(const Tree& t);
// g(v) = sum over u of d(u,v).
std::vector<long long> distance_sums(const Tree& t);
// sb(v) = max simultaneous calls through v; calls consume only their two
// endpoints, which must lie in distinct branches at v (relaying is free).
// Closed form: min(floor((n-1)/2), (n-1) - max branch size).
std::vector<int> switchboard_numbers(const Tree& t);

// Exact f_T(v) for every v via the two-pass rerooting DP, children in
// ascending vertex id.
VertexScores subtree_counts(const Tree& t);

// Directed-edge counts: entry for (u,v) adjacent is the number of subtrees
// of the component of T - v containing u that contain u. Basis of both the
// rerooting DP and the local core certificate.
struct DirectedSubtreeCounts {
    const Tree* tree;  // must outlive this struct
    std::vector<std::vector<BigCount>> per_neighbor;  // per_neighbor[u][i] = g(u -> adj[u][i])
    const BigCount& count(int u, int v) const;        // g(u->v), v adjacent to u
};
DirectedSubtreeCounts directed_subtree_counts(const Tree& t);

CentralSet center(const Tree& t);
CentralSet centroid(const Tree& t);
CentralSet median(const Tree& t);
CentralSet telephone_center(const Tree& t);
CentralSet subtree_core(const Tree& t);

// Local certificate: u is in S_c(T) iff g(u->v) >= g(v->u) for every
// neighbor v. Agrees with membership in subtree_core(t).
bool subtree_core_certificate(const Tree& t, int u);

// Detach pendant y and re-attach it at v (v in S_c(t), y pendant, y not
// adjacent to v). The subtree core of the result is exactly {v}.
Tree perturb_pendant_to_core(const Tree& t, int v, int y);

// Hypotheses of the pendant-path relocation: v in S_c(T); B the branch at v
// containing u (u adjacent to v); B not a path; x = path.back() a pendant of
// T; y the vertex nearest x with degree >= 3 and path = [y1..ym=x] the chain
// from y to x; z != y in B with the v-z path through y avoiding y1. The
// result satisfies f(v) > f(u).
struct DetachPathSpec {
    int v;
    int u;
    int y;
    int z;
    std::vector<int> path;  // y1, ..., ym = x
};
Tree perturb_detach_path(const Tree& t, const DetachPathSpec& spec);

}  // namespace treecenters
