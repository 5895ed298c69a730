#include "treecenters/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace treecenters {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_vertex(const Tree& t, int v, const char* what) {
    if (!t.valid_vertex(v)) {
        throw ValidationError(std::string(what) + " vertex id " + std::to_string(v) +
                              " out of range [1," + std::to_string(t.n) + "]");
    }
}

}  // namespace

bool Tree::has_edge(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n > 0 ? n - 1 : 0);
    for (int u = 1; u <= n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool CentralSet::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Tree build_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw ValidationError("vertex count must be >= 1, got " + std::to_string(n));
    if (static_cast<int>(edges.size()) != n - 1) {
        throw ValidationError("expected " + std::to_string(n - 1) + " edges for n=" +
                              std::to_string(n) + ", got " + std::to_string(edges.size()));
    }
    Tree t;
    t.n = n;
    t.adj.assign(n + 1, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ValidationError("edge " + edge_str(u, v) + " has a vertex id out of range [1," +
                                  std::to_string(n) + "]");
        }
        if (u == v) throw ValidationError("self-loop at edge " + edge_str(u, v));
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            throw ValidationError("duplicate edge " + edge_str(u, v));
        }
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (int v = 1; v <= n; ++v) std::sort(t.adj[v].begin(), t.adj[v].end());

    // n-1 distinct edges: connected <=> acyclic <=> tree.
    std::vector<char> vis(n + 1, 0);
    std::queue<int> q;
    q.push(1);
    vis[1] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : t.adj[u]) {
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) {
        int missing = 0;
        for (int v = 1; v <= n; ++v)
            if (!vis[v]) { missing = v; break; }
        throw ValidationError("disconnected: vertex " + std::to_string(missing) +
                              " is not reachable from vertex 1");
    }
    return t;
}

Tree build_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return build_from_edges(n, e);
}

Tree build_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return build_from_edges(n, e);
}

Tree build_path_star(PathStarParams p) {
    if (p.g < 2 || p.g > p.n - 3) {
        throw ValidationError("path-star requires 2 <= g <= n-3, got n=" + std::to_string(p.n) +
                              " g=" + std::to_string(p.g));
    }
    std::vector<std::pair<int, int>> e;
    int stem = p.n - p.g;
    for (int i = 1; i < stem; ++i) e.emplace_back(i, i + 1);
    for (int i = stem + 1; i <= p.n; ++i) e.emplace_back(stem, i);
    return build_from_edges(p.n, e);
}

Tree build_tnk(int n, int k) {
    if (k < 3 || k > n - 1) {
        throw ValidationError("T_{n,k} requires 3 <= k <= n-1, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(i, i + 1);
    int hub = (k + 2) / 2;
    for (int i = k + 2; i <= n; ++i) e.emplace_back(hub, i);
    return build_from_edges(n, e);
}

Tree build_double_broom(DoubleBroomParams p) {
    if (p.l < 1 || p.m < 1 || p.k < 1) {
        throw ValidationError("double broom requires l,m,k >= 1, got l=" + std::to_string(p.l) +
                              " m=" + std::to_string(p.m) + " k=" + std::to_string(p.k));
    }
    int n = p.l + p.m + p.k;
    std::vector<std::pair<int, int>> e;
    int path_first = p.l + 1;
    int path_last = p.l + p.k;
    for (int i = 1; i <= p.l; ++i) e.emplace_back(i, path_first);
    for (int i = path_first; i < path_last; ++i) e.emplace_back(i, i + 1);
    for (int i = path_last + 1; i <= n; ++i) e.emplace_back(path_last, i);
    return build_from_edges(n, e);
}

std::vector<int> distances_from(const Tree& t, int v) {
    require_vertex(t, v, "source");
    std::vector<int> dist(t.n + 1, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : t.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int eccentricity(const Tree& t, int v) {
    auto d = distances_from(t, v);
    return *std::max_element(d.begin() + 1, d.end());
}

int diameter(const Tree& t) {
    if (t.n <= 1) return 0;
    auto d0 = distances_from(t, 1);
    int a = static_cast<int>(std::max_element(d0.begin() + 1, d0.end()) - d0.begin());
    auto d1 = distances_from(t, a);
    return *std::max_element(d1.begin() + 1, d1.end());
}

int central_distance(const Tree& t, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) throw ValidationError("central_distance on an empty set");
    int best = -1;
    for (int u : a) {
        require_vertex(t, u, "set");
        auto d = distances_from(t, u);
        for (int v : b) {
            require_vertex(t, v, "set");
            if (best < 0 || d[v] < best) best = d[v];
        }
    }
    return best;
}

int central_distance(const Tree& t, const CentralSet& a, const CentralSet& b) {
    return central_distance(t, a.vertices, b.vertices);
}

std::vector<Branch> branches_at(const Tree& t, int v) {
    require_vertex(t, v, "branch root");
    std::vector<Branch> out;
    std::vector<char> vis(t.n + 1, 0);
    vis[v] = 1;
    for (int start : t.adj[v]) {
        if (vis[start]) continue;
        Branch b;
        std::queue<int> q;
        q.push(start);
        vis[start] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            b.vertices.push_back(u);
            for (int w : t.adj[u]) {
                if (!vis[w]) {
                    vis[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.edge_count = static_cast<int>(b.vertices.size()) - 1;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace treecenters
