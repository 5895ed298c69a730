#include "treecenters/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "treecenters/enumerate.hpp"
#include "treecenters/perron_exact.hpp"

namespace treecenters {

Laplacian laplacian(const Tree& t) {
    Laplacian l;
    l.n = t.n;
    l.m.assign(static_cast<size_t>(t.n) * t.n, 0);
    for (int v = 1; v <= t.n; ++v) {
        l.m[static_cast<size_t>(v - 1) * t.n + (v - 1)] = t.degree(v);
        for (int u : t.adj[v]) l.m[static_cast<size_t>(v - 1) * t.n + (u - 1)] = -1;
    }
    return l;
}

EigenResult jacobi_eigensymm(const std::vector<double>& a, int n) {
    if (n < 1 || static_cast<int>(a.size()) != n * n) {
        throw ValidationError("jacobi: bad matrix dimensions");
    }
    std::vector<double> m = a;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto M = [&](int i, int j) -> double& { return m[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    double frob = 0.0;
    for (double x : m) frob += x * x;
    frob = std::sqrt(frob);
    const double stop = std::max(1e-300, 1e-15 * frob);

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += M(p, q) * M(p, q);
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = M(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double theta = 0.5 * (M(q, q) - M(p, p)) / apq;
                double tt = (theta >= 0 ? 1.0 : -1.0) /
                            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(tt * tt + 1.0);
                double s = tt * c;
                double tau = s / (1.0 + c);

                double app = M(p, p), aqq = M(q, q);
                M(p, p) = app - tt * apq;
                M(q, q) = aqq + tt * apq;
                M(p, q) = 0.0;
                M(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = M(r, p), arq = M(r, q);
                    M(r, p) = arp - s * (arq + tau * arp);
                    M(p, r) = M(r, p);
                    M(r, q) = arq + s * (arp - tau * arq);
                    M(q, r) = M(r, q);
                }
                for (int r = 0; r < n; ++r) {
                    double vrp = V(r, p), vrq = V(r, q);
                    V(r, p) = vrp - s * (vrq + tau * vrp);
                    V(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (sweep == max_sweeps) {
        throw SolverError("jacobi eigensolver did not converge within " +
                          std::to_string(max_sweeps) + " sweeps");
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return M(i, i) < M(j, j); });

    EigenResult r;
    r.n = n;
    r.values.resize(n);
    r.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        r.values[k] = M(idx[k], idx[k]);
        for (int i = 0; i < n; ++i) r.vectors[static_cast<size_t>(k) * n + i] = V(i, idx[k]);
    }
    return r;
}

FiedlerResult fiedler(const Tree& t) {
    if (t.n < 2) throw ValidationError("fiedler vector requires n >= 2");
    const int n = t.n;
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int v = 1; v <= n; ++v) {
        a[static_cast<size_t>(v - 1) * n + (v - 1)] = t.degree(v);
        for (int u : t.adj[v]) a[static_cast<size_t>(v - 1) * n + (u - 1)] = -1.0;
    }
    EigenResult e = jacobi_eigensymm(a, n);

    FiedlerResult f;
    f.mu = e.values[1];
    f.y.assign(n + 1, 0.0);
    for (int v = 1; v <= n; ++v) f.y[v] = e.vectors[static_cast<size_t>(1) * n + (v - 1)];

    // Deterministic sign: the largest-|.| entry (lowest index on ties) is positive.
    int pivot = 1;
    for (int v = 2; v <= n; ++v)
        if (std::abs(f.y[v]) > std::abs(f.y[pivot])) pivot = v;
    if (f.y[pivot] < 0)
        for (int v = 1; v <= n; ++v) f.y[v] = -f.y[v];

    double sum = 0.0, norm2 = 0.0, res = 0.0;
    for (int v = 1; v <= n; ++v) {
        sum += f.y[v];
        norm2 += f.y[v] * f.y[v];
        double lv = t.degree(v) * f.y[v];
        for (int u : t.adj[v]) lv -= f.y[u];
        res = std::max(res, std::abs(lv - f.mu * f.y[v]));
    }
    f.residual = res;
    const double tol = 1e-10 * n;
    if (std::abs(sum) > tol || std::abs(std::sqrt(norm2) - 1.0) > tol || res > tol) {
        std::ostringstream os;
        os << "fiedler result failed invariants: |sum|=" << std::abs(sum)
           << " |norm-1|=" << std::abs(std::sqrt(norm2) - 1.0) << " residual=" << res;
        throw SolverError(os.str());
    }
    return f;
}

std::vector<int> CharacteristicSet::vertices() const {
    if (kind == CharKind::Vertex) return {u};
    return {u, v};
}

std::optional<CharacteristicSet> characteristic_set_fiedler(const Tree& t,
                                                            const FiedlerResult& f,
                                                            double zero_tol) {
    double ymax = 0.0;
    for (int v = 1; v <= t.n; ++v) ymax = std::max(ymax, std::abs(f.y[v]));
    const double thr = zero_tol * ymax;
    auto is_zero = [&](int v) { return std::abs(f.y[v]) <= thr; };

    std::vector<int> vertex_candidates;
    for (int v = 1; v <= t.n; ++v) {
        if (!is_zero(v)) continue;
        for (int u : t.adj[v]) {
            if (!is_zero(u)) {
                vertex_candidates.push_back(v);
                break;
            }
        }
    }
    if (vertex_candidates.size() == 1) {
        return CharacteristicSet{CharKind::Vertex, vertex_candidates[0], 0, CharMethod::Fiedler};
    }
    if (vertex_candidates.size() > 1) return std::nullopt;

    std::vector<std::pair<int, int>> edge_candidates;
    for (auto [u, v] : t.edges()) {
        if (!is_zero(u) && !is_zero(v) && f.y[u] * f.y[v] < 0) edge_candidates.emplace_back(u, v);
    }
    if (edge_candidates.size() == 1) {
        return CharacteristicSet{CharKind::Edge, edge_candidates[0].first,
                                 edge_candidates[0].second, CharMethod::Fiedler};
    }
    return std::nullopt;
}

BottleneckMatrix bottleneck_matrix(const Tree& t, int v, const std::vector<int>& component) {
    if (!t.valid_vertex(v)) throw ValidationError("bottleneck: vertex out of range");
    std::vector<int> comp = component;
    std::sort(comp.begin(), comp.end());
    if (comp.empty()) throw ValidationError("bottleneck: empty component");
    for (int w : comp) {
        if (!t.valid_vertex(w) || w == v) {
            throw ValidationError("bottleneck: set is not a component of T - v");
        }
    }

    int gateway = 0;
    for (int u : t.adj[v]) {
        if (std::binary_search(comp.begin(), comp.end(), u)) {
            if (gateway != 0) throw ValidationError("bottleneck: set is not a component of T - v");
            gateway = u;
        }
    }
    if (gateway == 0) throw ValidationError("bottleneck: set is not a component of T - v");

    // BFS of the actual component of T - v through the gateway; it must
    // match the given set exactly.
    std::vector<int> parent(t.n + 1, 0), depth(t.n + 1, -1);
    std::vector<int> reached;
    {
        std::vector<int> q{gateway};
        depth[gateway] = 0;
        parent[gateway] = 0;
        for (size_t head = 0; head < q.size(); ++head) {
            int u = q[head];
            reached.push_back(u);
            for (int w : t.adj[u]) {
                if (w != v && depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                }
            }
        }
    }
    std::sort(reached.begin(), reached.end());
    if (reached != comp) throw ValidationError("bottleneck: set is not a component of T - v");

    const int d = static_cast<int>(comp.size());
    BottleneckMatrix bm;
    bm.vertices = comp;
    bm.m.assign(static_cast<size_t>(d) * d, 0);
    auto lca_depth = [&](int a, int b) {
        while (a != b) {
            if (depth[a] >= depth[b]) a = parent[a];
            else b = parent[b];
        }
        return depth[a];
    };
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            long long entry = lca_depth(comp[i], comp[j]) + 1;
            bm.m[static_cast<size_t>(i) * d + j] = entry;
            bm.m[static_cast<size_t>(j) * d + i] = entry;
        }
    }

    // Exact tripwire: M must invert the principal Laplacian submatrix.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            long long acc = 0;
            for (int k = 0; k < d; ++k) {
                int wk = comp[k], wj = comp[j];
                long long lkj;
                if (wk == wj) lkj = t.degree(wk);
                else lkj = t.has_edge(wk, wj) ? -1 : 0;
                acc += bm.at(i, k) * lkj;
            }
            if (acc != (i == j ? 1 : 0)) {
                throw InvariantError("bottleneck matrix is not the exact inverse of the "
                                     "Laplacian submatrix at vertex " + std::to_string(v));
            }
        }
    }
    return bm;
}

double perron_value(const BottleneckMatrix& m, double rel_tol) {
    const int d = m.dim();
    if (d == 1) return static_cast<double>(m.at(0, 0));
    std::vector<double> x(d, 1.0), y(d, 0.0);
    const long long cap = 1000000;
    for (long long it = 0; it < cap; ++it) {
        for (int i = 0; i < d; ++i) {
            double acc = 0.0;
            for (int j = 0; j < d; ++j) acc += static_cast<double>(m.at(i, j)) * x[j];
            y[i] = acc;
        }
        // Collatz-Wielandt: rho lies between the extreme ratios.
        double lo = y[0] / x[0], hi = lo;
        for (int i = 1; i < d; ++i) {
            double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo <= rel_tol * hi) return 0.5 * (lo + hi);
        double ymax = 0.0;
        for (double t : y) ymax = std::max(ymax, t);
        for (int i = 0; i < d; ++i) x[i] = y[i] / ymax;
    }
    throw SolverError("perron power iteration exceeded its iteration cap");
}

namespace {

struct PerronScan {
    std::vector<int> gateways;      // one per component, in adjacency order
    std::vector<double> values;
    std::vector<std::vector<int>> components;
    int max_index = -1;
    std::vector<int> tied;          // indices within tie tolerance of the max
};

PerronScan scan_components(const Tree& t, int v, const SpectralConfig& cfg) {
    PerronScan s;
    auto branches = branches_at(t, v);
    s.gateways.assign(t.adj[v].begin(), t.adj[v].end());
    for (size_t i = 0; i < branches.size(); ++i) {
        s.components.push_back(branches[i].vertices);
        double val = perron_value(bottleneck_matrix(t, v, branches[i].vertices), cfg.perron_tol);
        s.values.push_back(val);
        if (s.max_index < 0 || val > s.values[s.max_index]) s.max_index = static_cast<int>(i);
    }
    double top = s.values[s.max_index];
    for (size_t i = 0; i < s.values.size(); ++i) {
        if (top - s.values[i] <= cfg.tie_tol * top) s.tied.push_back(static_cast<int>(i));
    }
    return s;
}

}  // namespace

CharacteristicSet characteristic_set_perron(const Tree& t, const SpectralConfig& cfg) {
    if (t.n < 2) throw ValidationError("characteristic set requires n >= 2");
    int cur = 1, prev = 0;
    for (int step = 0; step <= t.n; ++step) {
        PerronScan s = scan_components(t, cur, cfg);
        int winner = s.max_index;
        if (s.tied.size() >= 2) {
            // Near-ties must be settled exactly. Isomorphic rooted
            // components (equal bottleneck matrices up to simultaneous
            // permutation) tie for free; the rest go through the exact
            // algebraic comparison.
            std::vector<std::string> forms(s.tied.size());
            for (size_t i = 0; i < s.tied.size(); ++i) {
                forms[i] = rooted_canonical_form(t, s.gateways[s.tied[i]], cur);
            }
            std::vector<size_t> champs{0};
            for (size_t i = 1; i < s.tied.size(); ++i) {
                PerronCompare c;
                if (forms[i] == forms[champs[0]]) {
                    c = PerronCompare::Equal;
                } else {
                    int ca = s.tied[champs[0]], cb = s.tied[i];
                    c = compare_perron_exact(t, cur, s.components[ca], s.values[ca],
                                             s.components[cb], s.values[cb]);
                }
                if (c == PerronCompare::Equal) champs.push_back(i);
                else if (c == PerronCompare::SecondLarger) champs.assign(1, i);
            }
            if (champs.size() >= 2) {
                return CharacteristicSet{CharKind::Vertex, cur, 0, CharMethod::Perron};
            }
            winner = s.tied[champs[0]];
        }
        int next = s.gateways[winner];
        if (next == prev) {
            return CharacteristicSet{CharKind::Edge, std::min(cur, prev), std::max(cur, prev),
                                     CharMethod::Perron};
        }
        prev = cur;
        cur = next;
    }
    throw InvariantError("perron walk failed to locate the characteristic set");
}

CharacteristicSet characteristic_set(const Tree& t, const SpectralConfig& cfg) {
    if (t.n < 2) throw ValidationError("characteristic set requires n >= 2");
    CharacteristicSet perron = characteristic_set_perron(t, cfg);
    FiedlerResult f = fiedler(t);
    std::optional<CharacteristicSet> fied = characteristic_set_fiedler(t, f, cfg.zero_tol);
    if (!fied.has_value()) {
        // Ambiguous sign pattern: the Perron method is authoritative.
        return perron;
    }
    if (!fied->same_location(perron)) {
        auto render = [](const CharacteristicSet& c) {
            std::string s = c.kind == CharKind::Vertex ? "Vertex(" : "Edge(";
            s += std::to_string(c.u);
            if (c.kind == CharKind::Edge) s += "," + std::to_string(c.v);
            return s + ")";
        };
        throw InvariantError("characteristic-set methods disagree: fiedler=" + render(*fied) +
                             " perron=" + render(perron) + " (n=" + std::to_string(t.n) + ")");
    }
    CharacteristicSet out = perron;
    out.method = CharMethod::CrossValidated;
    return out;
}

int central_distance(const Tree& t, const CharacteristicSet& a, const CentralSet& b) {
    return central_distance(t, a.vertices(), b.vertices);
}

}  // namespace treecenters
