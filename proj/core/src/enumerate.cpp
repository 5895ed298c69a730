// Free trees are generated from their centroid decomposition: a tree with a
// single centroid is a root plus a non-increasing multiset of rooted subtrees
// of at most floor((n-1)/2) vertices each; a bicentroidal tree (n even) is an
// unordered pair of rooted trees on n/2 vertices joined at the roots. Both
// representations are unique per isomorphism class (Jordan), so isomorph
// rejection costs nothing. Candidate rooted subtrees are precomputed with the
// Beyer-Hedetniemi successor, which already emits canonical level sequences
// in decreasing lexicographic order.
#include "treecenters/enumerate.hpp"

#include <algorithm>
#include <cstdint>

namespace treecenters {

namespace {

using LevelSeq = std::vector<std::uint8_t>;  // root at level 0

// All canonical rooted level sequences on m vertices, decreasing lex order
// (path first, star last).
std::vector<LevelSeq> rooted_level_sequences(int m) {
    std::vector<LevelSeq> out;
    LevelSeq l(m);
    for (int i = 0; i < m; ++i) l[i] = static_cast<std::uint8_t>(i);
    for (;;) {
        out.push_back(l);
        int p = -1;
        for (int i = m - 1; i >= 0; --i) {
            if (l[i] >= 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (l[i] == l[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < m; ++i) l[i] = l[i - (p - q)];
    }
    return out;
}

// Decode a whole-tree level sequence (position i is vertex i+1; parent of i
// is the most recent shallower position). Adjacency comes out sorted because
// parents always precede children.
Tree tree_from_levels(const LevelSeq& levels) {
    int n = static_cast<int>(levels.size());
    Tree t;
    t.n = n;
    t.adj.assign(n + 1, {});
    std::vector<int> last_at_level(n + 1, 0);
    last_at_level[levels[0]] = 1;
    for (int i = 1; i < n; ++i) {
        int parent = last_at_level[levels[i] - 1];
        t.adj[parent].push_back(i + 1);
        t.adj[i + 1].push_back(parent);
        last_at_level[levels[i]] = i + 1;
    }
    return t;
}

struct Generator {
    int n;
    std::optional<int> diam;
    std::optional<Partition> part;
    const std::function<void(const Tree&)>* fn;

    std::vector<std::vector<LevelSeq>> pool;       // pool[s]: rooted trees on s vertices
    std::vector<std::pair<int, int>> chosen;       // (size, index) per principal subtree
    std::uint64_t branch_counter = 0;

    bool take_branch() {
        std::uint64_t b = branch_counter++;
        if (!part) return true;
        return b % static_cast<std::uint64_t>(part->count) ==
               static_cast<std::uint64_t>(part->index);
    }

    void emit(const LevelSeq& levels) {
        Tree t = tree_from_levels(levels);
        if (diam && diameter(t) != *diam) return;
        (*fn)(t);
    }

    void emit_unicentroid() {
        LevelSeq levels;
        levels.reserve(n);
        levels.push_back(0);
        for (auto [s, idx] : chosen) {
            for (std::uint8_t lv : pool[s][idx]) levels.push_back(static_cast<std::uint8_t>(lv + 1));
        }
        emit(levels);
    }

    // Extend the non-increasing subtree list; prev = (size,index) of the last
    // chosen subtree. Any remaining budget can be filled with single
    // vertices, so every recursion node leads to output.
    void extend(int budget, int prev_size, int prev_idx) {
        if (budget == 0) {
            emit_unicentroid();
            return;
        }
        int cap = (n - 1) / 2;
        const LevelSeq& prev = pool[prev_size][prev_idx];
        for (int s = std::min(budget, cap); s >= 1; --s) {
            const auto& list = pool[s];
            size_t start;
            if (s == prev_size) {
                start = static_cast<size_t>(prev_idx);
            } else {
                // Lists are lex-decreasing, so "<= prev" is a suffix.
                start = static_cast<size_t>(
                    std::partition_point(list.begin(), list.end(),
                                         [&](const LevelSeq& c) { return prev < c; }) -
                    list.begin());
            }
            for (size_t i = start; i < list.size(); ++i) {
                chosen.emplace_back(s, static_cast<int>(i));
                extend(budget - s, s, static_cast<int>(i));
                chosen.pop_back();
            }
        }
    }

    void run() {
        if (n == 1) {
            if (take_branch()) emit(LevelSeq{0});
            return;
        }
        int max_size = n / 2;
        pool.assign(max_size + 1, {});
        for (int s = 1; s <= max_size; ++s) pool[s] = rooted_level_sequences(s);

        // Single centroid: every principal subtree has <= floor((n-1)/2)
        // vertices. The first subtree choice is the branching decision.
        int cap = (n - 1) / 2;
        for (int s = std::min(n - 1, cap); s >= 1; --s) {
            for (size_t i = 0; i < pool[s].size(); ++i) {
                if (!take_branch()) continue;
                chosen.emplace_back(s, static_cast<int>(i));
                extend(n - 1 - s, s, static_cast<int>(i));
                chosen.pop_back();
            }
        }

        // Bicentroid: unordered pair of rooted trees on n/2 vertices, the
        // roots joined by an edge.
        if (n % 2 == 0) {
            int half = n / 2;
            const auto& list = pool[half];
            for (size_t i = 0; i < list.size(); ++i) {
                if (!take_branch()) continue;
                for (size_t j = i; j < list.size(); ++j) {
                    LevelSeq levels = list[i];
                    for (std::uint8_t lv : list[j])
                        levels.push_back(static_cast<std::uint8_t>(lv + 1));
                    emit(levels);
                }
            }
        }
    }
};

// Center via a diametral path: endpoints by double BFS, middle one or two
// vertices of the path.
std::vector<int> center_vertices(const Tree& t) {
    if (t.n == 1) return {1};
    auto d0 = distances_from(t, 1);
    int a = 1;
    for (int v = 2; v <= t.n; ++v)
        if (d0[v] > d0[a]) a = v;

    std::vector<int> parent(t.n + 1, 0), dist(t.n + 1, -1);
    std::vector<int> q{a};
    dist[a] = 0;
    for (size_t head = 0; head < q.size(); ++head) {
        int u = q[head];
        for (int w : t.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push_back(w);
            }
        }
    }
    int b = 1;
    for (int v = 2; v <= t.n; ++v)
        if (dist[v] > dist[b]) b = v;

    std::vector<int> path;
    for (int v = b; v != 0; v = parent[v]) path.push_back(v);  // b .. a
    int len = static_cast<int>(path.size()) - 1;               // diameter
    if (len % 2 == 0) return {path[len / 2]};
    std::vector<int> c{path[len / 2], path[len / 2 + 1]};
    std::sort(c.begin(), c.end());
    return c;
}

std::string rooted_form_rec(const Tree& t, int v, int parent, int depth, int blocked) {
    std::vector<std::string> kids;
    for (int w : t.adj[v]) {
        if (w == parent || w == blocked) continue;
        kids.push_back(rooted_form_rec(t, w, v, depth + 1, blocked));
    }
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::string out(1, static_cast<char>(depth));
    for (const auto& k : kids) out += k;
    return out;
}

}  // namespace

TreeStream::TreeStream(int n) : n_(n) {
    if (n < 1) throw ValidationError("tree stream requires n >= 1");
    if (n > kEnumerationCap) {
        throw ValidationError("enumeration cap exceeded: n=" + std::to_string(n) + " > " +
                              std::to_string(kEnumerationCap));
    }
}

TreeStream& TreeStream::with_diameter(int k) {
    if (k < 1 || k > n_ - 1) {
        throw ValidationError("diameter filter requires 1 <= k <= n-1, got k=" +
                              std::to_string(k) + " n=" + std::to_string(n_));
    }
    diam_ = k;
    return *this;
}

TreeStream& TreeStream::with_partition(Partition p) {
    if (p.count < 1 || p.index < 0 || p.index >= p.count) {
        throw ValidationError("partition requires 0 <= index < count");
    }
    part_ = p;
    return *this;
}

void TreeStream::for_each(const std::function<void(const Tree&)>& fn) const {
    Generator g;
    g.n = n_;
    g.diam = diam_;
    g.part = part_;
    g.fn = &fn;
    g.run();
}

std::uint64_t TreeStream::count() const {
    std::uint64_t c = 0;
    for_each([&](const Tree&) { ++c; });
    return c;
}

TreeStream free_trees(int n) { return TreeStream(n); }

TreeStream free_trees_with_diameter(int n, int k) { return TreeStream(n).with_diameter(k); }

std::string rooted_canonical_form(const Tree& t, int root, int blocked) {
    if (!t.valid_vertex(root)) throw ValidationError("rooted form: root out of range");
    if (t.n > 255) throw ValidationError("canonical form supports n <= 255");
    return rooted_form_rec(t, root, 0, 0, blocked);
}

std::string canonical_form(const Tree& t) {
    if (t.n > 255) throw ValidationError("canonical form supports n <= 255");
    auto centers = center_vertices(t);
    std::string best = rooted_form_rec(t, centers[0], 0, 0, 0);
    if (centers.size() == 2) {
        std::string other = rooted_form_rec(t, centers[1], 0, 0, 0);
        if (other > best) best = other;
    }
    return best;
}

Tree tree_from_canonical_form(const std::string& form) {
    if (form.empty() || form.size() > 255) {
        throw ValidationError("canonical form must have 1..255 bytes");
    }
    if (form[0] != 0) throw ValidationError("canonical form must start at level 0");
    LevelSeq levels(form.size());
    for (size_t i = 0; i < form.size(); ++i) {
        levels[i] = static_cast<std::uint8_t>(form[i]);
        if (i > 0 && (levels[i] < 1 || levels[i] > levels[i - 1] + 1)) {
            throw ValidationError("malformed level sequence at position " + std::to_string(i));
        }
    }
    return tree_from_levels(levels);
}

std::string render_canonical_form(const std::string& form) {
    std::string out;
    for (size_t i = 0; i < form.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(static_cast<int>(static_cast<unsigned char>(form[i])));
    }
    return out;
}

}  // namespace treecenters
