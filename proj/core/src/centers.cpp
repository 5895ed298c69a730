#include "treecenters/centers.hpp"

#include <algorithm>
#include <queue>

namespace treecenters {

namespace {

// BFS order from vertex 1 with parents; children of u are visited in
// ascending id because adjacency lists are sorted.
struct Rooting {
    std::vector<int> order;    // BFS order, root first
    std::vector<int> parent;   // parent[root] = 0
};

Rooting root_at(const Tree& t, int root) {
    Rooting r;
    r.parent.assign(t.n + 1, 0);
    r.order.reserve(t.n);
    std::vector<char> vis(t.n + 1, 0);
    std::queue<int> q;
    q.push(root);
    vis[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        r.order.push_back(u);
        for (int w : t.adj[u]) {
            if (!vis[w]) {
                vis[w] = 1;
                r.parent[w] = u;
                q.push(w);
            }
        }
    }
    return r;
}

CentralSet make_central(const Tree& t, std::vector<int> arg, const char* what) {
    std::sort(arg.begin(), arg.end());
    if (arg.empty() || arg.size() > 2) {
        throw InvariantError(std::string(what) + ": extremal vertex set has size " +
                             std::to_string(arg.size()) + ", expected 1 or 2");
    }
    if (arg.size() == 2 && !t.has_edge(arg[0], arg[1])) {
        throw InvariantError(std::string(what) + ": extremal vertices " +
                             std::to_string(arg[0]) + " and " + std::to_string(arg[1]) +
                             " are not adjacent");
    }
    return CentralSet{std::move(arg)};
}

template <typename V>
std::vector<int> argmin_all(const std::vector<V>& score, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (out.empty() || score[v] < score[out.front()]) {
            out.assign(1, v);
        } else if (score[v] == score[out.front()]) {
            out.push_back(v);
        }
    }
    return out;
}

template <typename V>
std::vector<int> argmax_all(const std::vector<V>& score, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (out.empty() || score[out.front()] < score[v]) {
            out.assign(1, v);
        } else if (score[v] == score[out.front()]) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

std::vector<int> eccentricities(const Tree& t) {
    std::vector<int> e(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) e[v] = eccentricity(t, v);
    return e;
}

std::vector<int> weights(const Tree& t) {
    // weight(v) = max component size of T - v; components split into the
    // rooted subtree sizes of the children plus the parent side.
    Rooting r = root_at(t, 1);
    std::vector<int> size(t.n + 1, 1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int u = *it;
        if (r.parent[u] != 0) size[r.parent[u]] += size[u];
    }
    std::vector<int> w(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        int best = 0;
        for (int c : t.adj[v]) {
            if (r.parent[c] == v) best = std::max(best, size[c]);
        }
        if (v != 1) best = std::max(best, t.n - size[v]);
        w[v] = best;
    }
    return w;
}

std::vector<long long> distance_sums(const Tree& t) {
    std::vector<long long> g(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        auto d = distances_from(t, v);
        long long s = 0;
        for (int u = 1; u <= t.n; ++u) s += d[u];
        g[v] = s;
    }
    return g;
}

std::vector<int> switchboard_numbers(const Tree& t) {
    auto w = weights(t);
    std::vector<int> sb(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        sb[v] = std::min((t.n - 1) / 2, (t.n - 1) - w[v]);
    }
    return sb;
}

DirectedSubtreeCounts directed_subtree_counts(const Tree& t) {
    Rooting r = root_at(t, 1);
    // down[v] = g(v -> parent(v)) for v != root.
    std::vector<BigCount> down(t.n + 1, 1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int u = *it;
        BigCount prod = 1;
        for (int c : t.adj[u]) {
            if (r.parent[c] == u) prod *= 1 + down[c];
        }
        down[u] = prod;
    }
    // up[v] = g(parent(v) -> v) via prefix/suffix products over siblings.
    std::vector<BigCount> up(t.n + 1, 1);
    for (int p : r.order) {
        std::vector<int> kids;
        for (int c : t.adj[p]) {
            if (r.parent[c] == p) kids.push_back(c);
        }
        BigCount from_parent = (p == 1) ? BigCount(1) : BigCount(1 + up[p]);
        size_t k = kids.size();
        std::vector<BigCount> pre(k + 1, 1), suf(k + 1, 1);
        for (size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * (1 + down[kids[i]]);
        for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * (1 + down[kids[i]]);
        for (size_t i = 0; i < k; ++i) up[kids[i]] = from_parent * pre[i] * suf[i + 1];
    }

    DirectedSubtreeCounts out;
    out.tree = &t;
    out.per_neighbor.assign(t.n + 1, {});
    for (int u = 1; u <= t.n; ++u) {
        out.per_neighbor[u].reserve(t.adj[u].size());
        for (int v : t.adj[u]) {
            // g(u->v): u's side of the edge {u,v}.
            out.per_neighbor[u].push_back(r.parent[u] == v ? down[u] : up[v]);
        }
    }
    return out;
}

const BigCount& DirectedSubtreeCounts::count(int u, int v) const {
    const auto& nb = tree->adj[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) {
        throw ValidationError("directed subtree count requested for non-edge (" +
                              std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return per_neighbor[u][static_cast<size_t>(it - nb.begin())];
}

VertexScores subtree_counts(const Tree& t) {
    auto dir = directed_subtree_counts(t);
    VertexScores s;
    s.kind = ScoreKind::SubtreeCount;
    s.counts.assign(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        BigCount f = 1;
        const auto& nb = t.adj[v];
        for (size_t i = 0; i < nb.size(); ++i) {
            f *= 1 + dir.count(nb[i], v);
        }
        s.counts[v] = f;
    }
    return s;
}

CentralSet center(const Tree& t) {
    return make_central(t, argmin_all(eccentricities(t), t.n), "center");
}

CentralSet centroid(const Tree& t) {
    return make_central(t, argmin_all(weights(t), t.n), "centroid");
}

CentralSet median(const Tree& t) {
    return make_central(t, argmin_all(distance_sums(t), t.n), "median");
}

CentralSet telephone_center(const Tree& t) {
    return make_central(t, argmax_all(switchboard_numbers(t), t.n), "telephone center");
}

CentralSet subtree_core(const Tree& t) {
    auto s = subtree_counts(t);
    return make_central(t, argmax_all(s.counts, t.n), "subtree core");
}

bool subtree_core_certificate(const Tree& t, int u) {
    if (!t.valid_vertex(u)) {
        throw ValidationError("certificate vertex " + std::to_string(u) + " out of range");
    }
    auto dir = directed_subtree_counts(t);
    for (int v : t.adj[u]) {
        if (dir.count(u, v) < dir.count(v, u)) return false;
    }
    return true;
}

Tree perturb_pendant_to_core(const Tree& t, int v, int y) {
    if (!t.valid_vertex(v) || !t.valid_vertex(y)) {
        throw ValidationError("perturbation vertex out of range");
    }
    if (!subtree_core(t).contains(v)) {
        throw ValidationError("hypothesis violated: v=" + std::to_string(v) +
                              " is not in the subtree core");
    }
    if (t.degree(y) != 1) {
        throw ValidationError("hypothesis violated: y=" + std::to_string(y) +
                              " is not a pendant vertex");
    }
    if (t.has_edge(v, y) || v == y) {
        throw ValidationError("hypothesis violated: y=" + std::to_string(y) +
                              " is adjacent to v");
    }
    auto edges = t.edges();
    int attach = t.adj[y][0];
    std::pair<int, int> old_edge{std::min(y, attach), std::max(y, attach)};
    std::erase_if(edges, [&](const std::pair<int, int>& e) { return e == old_edge; });
    edges.emplace_back(std::min(v, y), std::max(v, y));
    return build_from_edges(t.n, edges);
}

Tree perturb_detach_path(const Tree& t, const DetachPathSpec& spec) {
    const int v = spec.v, u = spec.u, y = spec.y, z = spec.z;
    for (int w : {v, u, y, z}) {
        if (!t.valid_vertex(w)) throw ValidationError("perturbation vertex out of range");
    }
    if (spec.path.empty()) throw ValidationError("hypothesis violated: empty pendant path");
    if (!subtree_core(t).contains(v)) {
        throw ValidationError("hypothesis violated: v is not in the subtree core");
    }
    if (!t.has_edge(v, u)) {
        throw ValidationError("hypothesis violated: u is not adjacent to v");
    }

    // B = branch at v through u; membership via BFS avoiding v.
    std::vector<char> in_b(t.n + 1, 0);
    {
        std::queue<int> q;
        q.push(u);
        in_b[u] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int w : t.adj[a]) {
                if (w != v && !in_b[w]) {
                    in_b[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    bool b_is_path = true;
    for (int w = 1; w <= t.n; ++w) {
        if (in_b[w] && t.degree(w) > 2) b_is_path = false;
    }
    if (b_is_path) throw ValidationError("hypothesis violated: branch B at v is a path");

    if (!in_b[y]) throw ValidationError("hypothesis violated: y is not in branch B");
    if (t.degree(y) < 3) {
        throw ValidationError("hypothesis violated: y has degree < 3");
    }
    int prev = y;
    for (size_t i = 0; i < spec.path.size(); ++i) {
        int p = spec.path[i];
        if (!t.valid_vertex(p) || !in_b[p]) {
            throw ValidationError("hypothesis violated: path vertex outside branch B");
        }
        if (!t.has_edge(prev, p)) {
            throw ValidationError("hypothesis violated: path is not a chain from y");
        }
        bool last = (i + 1 == spec.path.size());
        int want = last ? 1 : 2;
        if (t.degree(p) != want) {
            throw ValidationError(last
                ? "hypothesis violated: path endpoint x is not a pendant vertex"
                : "hypothesis violated: interior path vertex has degree != 2 "
                  "(y is not the nearest degree->=3 vertex to x)");
        }
        prev = p;
    }

    if (z == y) throw ValidationError("hypothesis violated: z equals y");
    if (!in_b[z]) throw ValidationError("hypothesis violated: z is not in branch B");
    {
        // Path from v to z must pass through y but not y1.
        auto par = root_at(t, v).parent;
        bool through_y = false, through_y1 = false;
        for (int a = z; a != 0 && a != v; a = par[a]) {
            if (a == y) through_y = true;
            if (a == spec.path.front()) through_y1 = true;
        }
        if (!through_y) {
            throw ValidationError("hypothesis violated: path from v to z does not contain y");
        }
        if (through_y1 || z == spec.path.front()) {
            throw ValidationError("hypothesis violated: path from v to z contains y1");
        }
    }

    auto edges = t.edges();
    int y1 = spec.path.front();
    std::pair<int, int> old_edge{std::min(y, y1), std::max(y, y1)};
    std::erase_if(edges, [&](const std::pair<int, int>& e) { return e == old_edge; });
    edges.emplace_back(std::min(z, y1), std::max(z, y1));
    return build_from_edges(t.n, edges);
}

}  // namespace treecenters
