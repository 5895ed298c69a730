#include "treecenters/reports.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace treecenters {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double x, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

ordered_json config_json(const Config& cfg) {
    return ordered_json{{"zero_tol", cfg.zero_tol},
                        {"perron_tol", cfg.perron_tol},
                        {"tie_tol", cfg.tie_tol},
                        {"brute_cap", cfg.brute_cap}};
}

std::string method_name(CharMethod m) {
    switch (m) {
        case CharMethod::Fiedler: return "fiedler";
        case CharMethod::Perron: return "perron";
        case CharMethod::CrossValidated: return "cross-validated";
    }
    return "?";
}

ordered_json chi_json(const CharacteristicSet& cs) {
    return ordered_json{{"kind", cs.kind == CharKind::Vertex ? "vertex" : "edge"},
                        {"vertices", cs.vertices()}};
}

const char* kDistanceOrder[6] = {"C-Cd", "C-Sc", "C-chi", "Cd-Sc", "Cd-chi", "Sc-chi"};

}  // namespace

void Config::validate() const {
    if (zero_tol <= 0 || perron_tol <= 0 || tie_tol <= 0) {
        throw ValidationError("tolerances must be positive");
    }
    if (brute_cap < 1 || brute_cap > kEnumerationCap) {
        throw ValidationError("brute_cap must be in [1," + std::to_string(kEnumerationCap) + "]");
    }
    if (output_format != "json" && output_format != "csv" && output_format != "dot" &&
        output_format != "text") {
        throw ValidationError("output format must be one of json|csv|dot|text");
    }
}

AnalyzeResult analyze(const Tree& t, const Config& cfg, std::string family) {
    AnalyzeResult r;
    r.tree = t;
    r.family = std::move(family);
    r.center = center(t);
    r.centroid = centroid(t);
    r.median = median(t);
    r.telephone = telephone_center(t);
    r.core = subtree_core(t);
    r.subtree_f = subtree_counts(t).counts;
    if (t.n >= 2) {
        r.fiedler = fiedler(t);
        r.chi = characteristic_set(t, cfg.spectral());
    }

    std::vector<std::vector<int>> sets = {r.center.vertices, r.centroid.vertices,
                                          r.core.vertices,
                                          r.chi ? r.chi->vertices() : std::vector<int>{}};
    const int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int p = 0; p < 6; ++p) {
        auto& a = sets[kPairs[p][0]];
        auto& b = sets[kPairs[p][1]];
        if (a.empty() || b.empty()) continue;  // chi rows absent when n < 2
        r.distances.emplace_back(kDistanceOrder[p], central_distance(t, a, b));
    }
    return r;
}

std::string analyze_json(const AnalyzeResult& r, const Config& cfg) {
    ordered_json j;
    j["config"] = config_json(cfg);
    ordered_json tree;
    tree["n"] = r.tree.n;
    if (!r.family.empty()) tree["family"] = r.family;
    std::vector<std::vector<int>> es;
    for (auto [u, v] : r.tree.edges()) es.push_back({u, v});
    tree["edges"] = es;
    j["tree"] = tree;

    j["centers"] = ordered_json{{"center", r.center.vertices},
                                {"centroid", r.centroid.vertices},
                                {"median", r.median.vertices},
                                {"telephone", r.telephone.vertices},
                                {"subtree_core", r.core.vertices}};
    std::vector<std::string> f;
    for (int v = 1; v <= r.tree.n; ++v) f.push_back(r.subtree_f[v].str());
    j["subtree_counts"] = f;

    if (r.fiedler) {
        ordered_json sp;
        sp["mu"] = r.fiedler->mu;
        sp["residual"] = r.fiedler->residual;
        std::vector<double> y(r.fiedler->y.begin() + 1, r.fiedler->y.end());
        sp["fiedler_vector"] = y;
        sp["characteristic_set"] = chi_json(*r.chi);
        sp["method"] = method_name(r.chi->method);
        j["spectral"] = sp;
    } else {
        j["spectral"] = nullptr;
    }

    ordered_json d;
    for (const auto& [k, v] : r.distances) d[k] = v;
    j["distances"] = d;
    return j.dump(2) + "\n";
}

std::string analyze_text(const AnalyzeResult& r, const Config& cfg) {
    std::ostringstream os;
    os << "tree: n=" << r.tree.n;
    if (!r.family.empty()) os << " (" << r.family << ")";
    os << "\n";
    os << "config: zero_tol=" << fmt_double(cfg.zero_tol, "%.3e")
       << " perron_tol=" << fmt_double(cfg.perron_tol, "%.3e")
       << " tie_tol=" << fmt_double(cfg.tie_tol, "%.3e") << "\n";
    auto set_line = [&](const char* name, const CentralSet& s) {
        os << name << ": {";
        for (size_t i = 0; i < s.vertices.size(); ++i) {
            if (i) os << ",";
            os << s.vertices[i];
        }
        os << "}\n";
    };
    set_line("center", r.center);
    set_line("centroid", r.centroid);
    set_line("median", r.median);
    set_line("telephone", r.telephone);
    set_line("subtree_core", r.core);
    if (r.fiedler) {
        os << "mu: " << fmt_double(r.fiedler->mu, "%.10g") << "\n";
        os << "characteristic_set: " << (r.chi->kind == CharKind::Vertex ? "vertex {" : "edge {")
           << r.chi->u;
        if (r.chi->kind == CharKind::Edge) os << "," << r.chi->v;
        os << "} [" << method_name(r.chi->method) << "]\n";
    }
    os << "distances:";
    for (const auto& [k, v] : r.distances) os << " " << k << "=" << v;
    os << "\n";
    return os.str();
}

std::string analyze_dot(const AnalyzeResult& r) {
    std::ostringstream os;
    os << "graph tree {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    os << "  // C center, Cd centroid, Sc subtree core, chi characteristic set\n";
    struct Tag {
        const char* name;
        const char* color;
        std::vector<int> vs;
    };
    std::vector<Tag> tags = {{"C", "#e06666", r.center.vertices},
                             {"Cd", "#6fa8dc", r.centroid.vertices},
                             {"Sc", "#93c47d", r.core.vertices},
                             {"chi", "#f6b26b", r.chi ? r.chi->vertices() : std::vector<int>{}}};
    for (int v = 1; v <= r.tree.n; ++v) {
        std::string label;
        const char* color = nullptr;
        for (const auto& tag : tags) {
            for (int u : tag.vs) {
                if (u == v) {
                    if (!label.empty()) label += ",";
                    label += tag.name;
                    if (!color) color = tag.color;
                }
            }
        }
        if (!label.empty()) {
            os << "  " << v << " [fillcolor=\"" << color << "\", label=\"" << v << "\\n" << label
               << "\"];\n";
        }
    }
    for (auto [u, v] : r.tree.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string verify_json(const VerifyReport& r, const Config& cfg) {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["verifier"] = r.verifier;
    j["pass"] = r.pass;
    j["statement_count"] = r.statements.size();
    ordered_json st = ordered_json::array();
    for (const auto& s : r.statements) {
        st.push_back(ordered_json{{"id", s.id}, {"pass", s.pass}, {"detail", s.detail}});
    }
    j["statements"] = st;
    return j.dump(2) + "\n";
}

std::string verify_text(const VerifyReport& r, const Config&) {
    std::ostringstream os;
    for (const auto& s : r.statements) {
        os << (s.pass ? "[PASS] " : "[FAIL] ") << r.verifier << " " << s.id;
        if (!s.detail.empty()) os << " (" << s.detail << ")";
        os << "\n";
    }
    os << (r.pass ? "PASS" : "FAIL") << " " << r.verifier << ": " << r.statements.size()
       << " statements\n";
    return os.str();
}

std::string extremal_json(const ExtremalRecord& r, const Config& cfg) {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["n"] = r.n;
    j["pair"] = pair_name(r.pair);
    if (r.diameter) j["diameter"] = *r.diameter;
    else j["diameter"] = nullptr;
    j["max_distance"] = r.max_distance;
    j["trees_examined"] = r.trees_examined;
    std::optional<long long> formula;
    if (!r.diameter) formula = delta_formula(r.n, r.pair);
    if (formula) j["delta_formula"] = *formula;
    else j["delta_formula"] = nullptr;
    j["witness_count"] = r.witnesses.size();
    std::vector<std::string> ws;
    for (const auto& w : r.witnesses) ws.push_back(render_canonical_form(w));
    j["witnesses"] = ws;
    return j.dump(2) + "\n";
}

std::string extremal_csv(const std::vector<ExtremalRecord>& rows) {
    std::string out = "n,pair,diameter,delta_brute,delta_formula,match,witness_count\n";
    for (const auto& r : rows) {
        std::optional<long long> formula;
        if (!r.diameter) formula = delta_formula(r.n, r.pair);
        out += std::to_string(r.n) + "," + pair_name(r.pair) + ",";
        out += r.diameter ? std::to_string(*r.diameter) : "";
        out += "," + std::to_string(r.max_distance) + ",";
        out += formula ? std::to_string(*formula) : "";
        out += ",";
        out += formula ? (r.max_distance == *formula ? "yes" : "no") : "";
        out += "," + std::to_string(r.witnesses.size()) + "\n";
    }
    return out;
}

std::string conjecture_json(const ConjectureReport& r, const Config& cfg) {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["n_max"] = r.n_max;
    j["entry_count"] = r.entries.size();
    j["counterexample_count"] = r.counterexamples.size();
    ordered_json ce = ordered_json::array();
    for (size_t idx : r.counterexamples) {
        const auto& e = r.entries[idx];
        ce.push_back(ordered_json{{"n", e.n}, {"g", e.g}, {"note", e.note}});
    }
    j["counterexamples"] = ce;
    ordered_json es = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json je{{"n", e.n}, {"g", e.g}};
        if (e.unresolved) {
            je["kind"] = "unresolved";
            je["note"] = e.note;
        } else {
            je["kind"] = e.cs->kind == CharKind::Vertex ? "vertex" : "edge";
            je["vertices"] = e.cs->vertices();
        }
        es.push_back(je);
    }
    j["entries"] = es;
    return j.dump(2) + "\n";
}

std::string conjecture_csv(const ConjectureReport& r) {
    std::string out = "n,g,kind,u,v\n";
    for (const auto& e : r.entries) {
        out += std::to_string(e.n) + "," + std::to_string(e.g) + ",";
        if (e.unresolved) {
            out += "unresolved,,";
        } else if (e.cs->kind == CharKind::Vertex) {
            out += "vertex," + std::to_string(e.cs->u) + ",";
        } else {
            out += "edge," + std::to_string(e.cs->u) + "," + std::to_string(e.cs->v);
        }
        out += "\n";
    }
    return out;
}

std::string asymptotic_csv(CenterPair pair, const std::vector<AsymptoticRow>& rows) {
    std::string out = "n,pair,delta_lo,delta_hi,ratio_lo,ratio_hi\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + pair_name(pair) + "," + std::to_string(r.lo) + "," +
               std::to_string(r.hi) + "," +
               fmt_double(static_cast<double>(r.lo) / static_cast<double>(r.n)) + "," +
               fmt_double(static_cast<double>(r.hi) / static_cast<double>(r.n)) + "\n";
    }
    return out;
}

}  // namespace treecenters
