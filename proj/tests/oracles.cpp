#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace oracles {

using treecenters::Tree;

std::vector<long long> subtree_counts_brute(const Tree& t) {
    if (t.n > 20) throw std::runtime_error("brute subtree oracle capped at n=20");
    std::vector<long long> f(t.n + 1, 0);
    const std::uint32_t full = (t.n >= 32) ? 0xffffffffu : ((1u << t.n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // connectivity check by BFS inside the mask
        int start = 0;
        for (int v = 1; v <= t.n; ++v) {
            if (mask & (1u << (v - 1))) {
                start = v;
                break;
            }
        }
        std::uint32_t seen = 1u << (start - 1);
        std::vector<int> q{start};
        for (size_t h = 0; h < q.size(); ++h) {
            for (int w : t.adj[q[h]]) {
                std::uint32_t bit = 1u << (w - 1);
                if ((mask & bit) && !(seen & bit)) {
                    seen |= bit;
                    q.push_back(w);
                }
            }
        }
        if (seen != mask) continue;
        for (int v : q) ++f[v];
    }
    return f;
}

namespace {

int sb_backtrack(const std::vector<int>& branch_of, std::vector<char>& used, size_t from) {
    size_t i = from;
    while (i < used.size() && used[i]) ++i;
    if (i >= used.size()) return 0;
    // vertex i stays idle
    used[i] = 1;
    int best = sb_backtrack(branch_of, used, i + 1);
    // or calls someone in another branch
    for (size_t j = i + 1; j < used.size(); ++j) {
        if (used[j] || branch_of[j] == branch_of[i]) continue;
        used[j] = 1;
        best = std::max(best, 1 + sb_backtrack(branch_of, used, i + 1));
        used[j] = 0;
    }
    used[i] = 0;
    return best;
}

}  // namespace

int switchboard_brute(const Tree& t, int v) {
    auto branches = treecenters::branches_at(t, v);
    std::vector<int> branch_of;  // one entry per vertex != v
    for (size_t b = 0; b < branches.size(); ++b) {
        for (int u : branches[b].vertices) {
            (void)u;
            branch_of.push_back(static_cast<int>(b));
        }
    }
    std::vector<char> used(branch_of.size(), 0);
    return sb_backtrack(branch_of, used, 0);
}

namespace {

// Same canonical encoding as treecenters::canonical_form, on flat arrays.
struct FlatCanon {
    int n;
    std::array<std::array<int, 12>, 13> adj{};
    std::array<int, 13> deg{};

    void reset(int n_) {
        n = n_;
        deg.fill(0);
    }
    void add_edge(int u, int v) {
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
    }

    std::string rooted(int v, int parent, int depth) const {
        std::string kids[12];
        int k = 0;
        for (int i = 0; i < deg[v]; ++i) {
            int w = adj[v][i];
            if (w != parent) kids[k++] = rooted(w, v, depth + 1);
        }
        std::sort(kids, kids + k, std::greater<>());
        std::string out(1, static_cast<char>(depth));
        for (int i = 0; i < k; ++i) out += kids[i];
        return out;
    }

    std::string canonical() const {
        // double BFS for a diametral path, then its middle
        auto bfs = [&](int src, std::array<int, 13>& dist, std::array<int, 13>& par) {
            dist.fill(-1);
            int q[13], head = 0, tail = 0;
            q[tail++] = src;
            dist[src] = 0;
            par[src] = 0;
            while (head < tail) {
                int u = q[head++];
                for (int i = 0; i < deg[u]; ++i) {
                    int w = adj[u][i];
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        par[w] = u;
                        q[tail++] = w;
                    }
                }
            }
        };
        std::array<int, 13> dist{}, par{};
        bfs(1, dist, par);
        int a = 1;
        for (int v = 2; v <= n; ++v)
            if (dist[v] > dist[a]) a = v;
        bfs(a, dist, par);
        int b = 1;
        for (int v = 2; v <= n; ++v)
            if (dist[v] > dist[b]) b = v;
        int path[13], len = 0;
        for (int v = b; v != 0; v = par[v]) {
            path[len++] = v;
            if (v == a) break;
        }
        --len;  // edges on the diametral path
        if (len % 2 == 0) return rooted(path[len / 2], 0, 0);
        std::string f1 = rooted(path[len / 2], 0, 0);
        std::string f2 = rooted(path[len / 2 + 1], 0, 0);
        return std::max(f1, f2);
    }
};

}  // namespace

std::unordered_set<std::string> prufer_forms(int n) {
    if (n < 1 || n > 10) throw std::runtime_error("prufer oracle supports 1 <= n <= 10");
    std::unordered_set<std::string> forms;
    FlatCanon fc;
    if (n == 1) {
        forms.insert(std::string(1, '\0'));
        return forms;
    }
    if (n == 2) {
        fc.reset(2);
        fc.add_edge(1, 2);
        forms.insert(fc.canonical());
        return forms;
    }
    const int m = n - 2;
    std::vector<int> seq(m, 1);
    std::vector<int> deg(n + 1);
    for (;;) {
        // decode one Prüfer sequence
        for (int v = 1; v <= n; ++v) deg[v] = 1;
        for (int x : seq) ++deg[x];
        fc.reset(n);
        int ptr = 1;
        while (deg[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int x : seq) {
            fc.add_edge(leaf, x);
            if (--deg[x] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (deg[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        fc.add_edge(leaf, n);
        forms.insert(fc.canonical());

        // next sequence
        int i = m - 1;
        while (i >= 0 && seq[i] == n) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return forms;
}

std::uint64_t prufer_count(int n) { return prufer_forms(n).size(); }

std::vector<long long> rooted_tree_counts(int n_max) {
    std::vector<long long> r(n_max + 1, 0);
    if (n_max >= 1) r[1] = 1;
    std::vector<long long> s(n_max + 1, 0);  // s[k] = sum_{d|k} d*r[d]
    for (int n = 1; n < n_max; ++n) {
        for (int k = n; k <= n_max; k += n) s[k] += static_cast<long long>(n) * r[n];
        long long acc = 0;
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k + 1];
        r[n + 1] = acc / n;
    }
    return r;
}

std::vector<long long> free_tree_counts(int n_max) {
    auto r = rooted_tree_counts(n_max);
    std::vector<long long> t(n_max + 1, 0);
    for (int n = 1; n <= n_max; ++n) {
        long long v = r[n];
        for (int i = 1; i < n - i; ++i) v -= r[i] * r[n - i];
        if (n % 2 == 0) v -= r[n / 2] * (r[n / 2] - 1) / 2;
        t[n] = v;
    }
    return t;
}

}  // namespace oracles
