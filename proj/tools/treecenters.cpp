// treecenters — command line front end: analyze / verify / conjecture /
// extremal / enumerate.
//
// Exit codes: 0 all checks pass, 1 verification violation or internal
// failure, 2 usage or input error.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "treecenters/centers.hpp"
#include "treecenters/enumerate.hpp"
#include "treecenters/extremal.hpp"
#include "treecenters/io.hpp"
#include "treecenters/reports.hpp"

namespace {

using namespace treecenters;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& s, int default_lo) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        std::string a = s.substr(0, pos), b = s.substr(pos + 2);
        int lo = a.empty() ? default_lo : std::stoi(a);
        int hi = std::stoi(b);
        return {lo, hi};
    } catch (const std::exception&) {
        throw ValidationError("cannot parse range \"" + s + "\" (expected N or A..B)");
    }
}

Partition parse_partition(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) {
        throw ValidationError("cannot parse partition \"" + s + "\" (expected i/m)");
    }
    try {
        return Partition{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
    } catch (const std::exception&) {
        throw ValidationError("cannot parse partition \"" + s + "\" (expected i/m)");
    }
}

CenterPair parse_pair(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) {
        throw ValidationError("cannot parse pair \"" + s + "\" (expected a,b)");
    }
    auto a = kind_from_token(s.substr(0, pos));
    auto b = kind_from_token(s.substr(pos + 1));
    if (!a || !b) {
        throw ValidationError("unknown center kind in \"" + s +
                              "\" (use center|centroid|core|chi)");
    }
    if (*a == *b) throw ValidationError("pair must name two distinct center kinds");
    return make_pair_normalized(*a, *b);
}

void check_cap(int n, const Config& cfg) {
    if (n > cfg.brute_cap) {
        throw ValidationError("n=" + std::to_string(n) + " exceeds brute cap " +
                              std::to_string(cfg.brute_cap) + " (raise with --brute-cap)");
    }
}

struct AnalyzeArgs {
    std::string file;
    std::string family;
    int n = 0, g = 0, k = 0, l = 0, m = 0;
};

Tree build_input(const AnalyzeArgs& a, std::string& family_desc) {
    if (!a.file.empty()) {
        family_desc = a.file;
        return load_edge_list(a.file);
    }
    if (a.family == "path-star") {
        family_desc = "path-star(n=" + std::to_string(a.n) + ",g=" + std::to_string(a.g) + ")";
        return build_path_star({a.n, a.g});
    }
    if (a.family == "path") {
        family_desc = "path(n=" + std::to_string(a.n) + ")";
        if (a.n < 1) throw ValidationError("path requires --n >= 1");
        return build_path(a.n);
    }
    if (a.family == "star") {
        family_desc = "star(n=" + std::to_string(a.n) + ")";
        if (a.n < 2) throw ValidationError("star requires --n >= 2");
        return build_star(a.n);
    }
    if (a.family == "tnk") {
        family_desc = "tnk(n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k) + ")";
        return build_tnk(a.n, a.k);
    }
    if (a.family == "double-broom") {
        family_desc = "double-broom(l=" + std::to_string(a.l) + ",m=" + std::to_string(a.m) +
                      ",k=" + std::to_string(a.k) + ")";
        return build_double_broom({a.l, a.m, a.k});
    }
    throw ValidationError("provide an edge-list file or --family "
                          "path-star|path|star|tnk|double-broom");
}

int run_analyze(const AnalyzeArgs& args, const Config& cfg) {
    std::string family;
    Tree t = build_input(args, family);
    AnalyzeResult r = analyze(t, cfg, family);
    if (cfg.output_format == "json") std::cout << analyze_json(r, cfg);
    else if (cfg.output_format == "text") std::cout << analyze_text(r, cfg);
    else if (cfg.output_format == "dot") std::cout << analyze_dot(r);
    else throw ValidationError("analyze supports --format json|text|dot");
    return 0;
}

int run_verify(const std::string& id, const std::string& n_range, std::optional<int> only_k,
               const Config& cfg) {
    SpectralConfig sc = cfg.spectral();
    VerifyReport rep;
    auto gamma_filtered = [&](VerifyReport full) {
        if (!only_k) return full;
        VerifyReport out;
        out.verifier = full.verifier;
        std::string tag = "k=" + std::to_string(*only_k);
        for (auto& s : full.statements) {
            if (s.id.find(tag) != std::string::npos) out.add(s.id, s.pass, s.detail);
        }
        return out;
    };
    if (id == "delta-cc" || id == "delta-csc" || id == "delta-cdsc") {
        Range r = parse_range(n_range.empty() ? "5..14" : n_range, 5);
        check_cap(r.hi, cfg);
        CenterPair pair =
            id == "delta-cc"
                ? make_pair_normalized(CenterKind::Center, CenterKind::Centroid)
                : (id == "delta-csc"
                       ? make_pair_normalized(CenterKind::Center, CenterKind::SubtreeCore)
                       : make_pair_normalized(CenterKind::Centroid, CenterKind::SubtreeCore));
        rep = verify_delta_formulas(pair, r.lo, r.hi, sc);
    } else if (id == "pathstar-max") {
        Range r = parse_range(n_range.empty() ? "5..14" : n_range, 5);
        check_cap(r.hi, cfg);
        rep = verify_pathstar_maximizer(r.lo, r.hi, sc);
    } else if (id == "collinearity") {
        Range r = parse_range(n_range.empty() ? "5..20" : n_range, 5);
        rep = verify_collinearity(r.hi, sc);
    } else if (id == "movement") {
        Range r = parse_range(n_range.empty() ? "7..40" : n_range, 7);
        rep = verify_cs_movement(r.lo, r.hi, sc);
    } else if (id == "coincidence") {
        Range r = parse_range(n_range.empty() ? "5..12" : n_range, 5);
        check_cap(r.hi, cfg);
        rep = verify_coincidence(r.lo, r.hi);
    } else if (id == "gamma-min") {
        Range r = parse_range(n_range.empty() ? "5..12" : n_range, 5);
        check_cap(r.hi, cfg);
        rep = gamma_filtered(verify_gamma_min(r.lo, r.hi, sc));
    } else if (id == "gamma-c-chi") {
        Range r = parse_range(n_range.empty() ? "5..12" : n_range, 5);
        check_cap(r.hi, cfg);
        rep = gamma_filtered(verify_gamma_c_chi(r.lo, r.hi, sc));
    } else if (id == "gamma-cd-chi") {
        Range r = parse_range(n_range.empty() ? "5..12" : n_range, 5);
        check_cap(r.hi, cfg);
        rep = gamma_filtered(verify_gamma_cd_chi(r.lo, r.hi, sc));
    } else {
        throw ValidationError("unknown theorem id \"" + id +
                              "\" (delta-cc delta-csc delta-cdsc pathstar-max collinearity "
                              "movement gamma-min gamma-c-chi gamma-cd-chi coincidence)");
    }
    if (cfg.output_format == "json") std::cout << verify_json(rep, cfg);
    else if (cfg.output_format == "text") std::cout << verify_text(rep, cfg);
    else throw ValidationError("verify supports --format json|text");
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"central parts of trees: centers, spectra, enumeration, extremal search"};
    app.require_subcommand(1);
    app.add_option("--zero-tol", cfg.zero_tol, "Fiedler zero tolerance")
        ->envname("TREECENTERS_ZERO_TOL");
    app.add_option("--perron-tol", cfg.perron_tol, "power iteration relative tolerance")
        ->envname("TREECENTERS_PERRON_TOL");
    app.add_option("--tie-tol", cfg.tie_tol, "Perron tie threshold")
        ->envname("TREECENTERS_TIE_TOL");
    app.add_option("--brute-cap", cfg.brute_cap, "max n for exhaustive enumeration")
        ->envname("TREECENTERS_BRUTE_CAP");
    app.add_option("--format", cfg.output_format, "json | csv | dot | text")
        ->envname("TREECENTERS_FORMAT");

    AnalyzeArgs aargs;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "centers, subtree counts, Fiedler data and pairwise distances of one tree");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("file", aargs.file, "edge-list file (first line n, then u v lines)");
    analyze_cmd->add_option("--family", aargs.family,
                            "path-star | path | star | tnk | double-broom");
    analyze_cmd->add_option("--n", aargs.n, "vertex count");
    analyze_cmd->add_option("--g", aargs.g, "path-star leaf count");
    analyze_cmd->add_option("--k", aargs.k, "diameter / path parameter");
    analyze_cmd->add_option("--l", aargs.l, "double-broom left pendant count");
    analyze_cmd->add_option("--m", aargs.m, "double-broom right pendant count");

    std::string verify_id, verify_n;
    std::optional<int> verify_k;
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem verifier; nonzero exit on violation");
    verify_cmd->fallthrough();
    verify_cmd->add_option("id", verify_id, "theorem id")->required();
    verify_cmd->add_option("--n", verify_n, "n or range a..b");
    verify_cmd->add_option("--k", verify_k, "restrict the gamma verifiers to one diameter");

    int conj_nmax = 40;
    auto* conj_cmd = app.add_subcommand("conjecture",
                                        "scan chi(P_{n-g,g}) and report vertex outcomes");
    conj_cmd->fallthrough();
    conj_cmd->add_option("--n-max", conj_nmax, "upper bound for n");

    int ext_n = 0;
    std::string ext_pair, ext_partition, ext_asym;
    std::optional<int> ext_k;
    int ext_workers = 1;
    auto* ext_cmd = app.add_subcommand(
        "extremal", "brute-force delta table row with witnesses, or formula tables");
    ext_cmd->fallthrough();
    ext_cmd->add_option("--n", ext_n, "vertex count");
    ext_cmd->add_option("--pair", ext_pair, "two of center|centroid|core|chi, comma separated")
        ->required();
    ext_cmd->add_option("--k", ext_k, "restrict to trees of diameter k");
    ext_cmd->add_option("--workers", ext_workers, "parallel workers (deterministic result)");
    ext_cmd->add_option("--partition", ext_partition, "run only worker i of m, as i/m");
    ext_cmd->add_option("--asymptotic", ext_asym,
                        "comma-separated n list; emit the formula-based CSV table instead");

    int enum_n = 0;
    std::optional<int> enum_k;
    std::string enum_partition;
    bool enum_canonical = false, enum_count = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "stream all free trees on n vertices");
    enum_cmd->fallthrough();
    enum_cmd->add_option("--n", enum_n, "vertex count")->required();
    enum_cmd->add_option("--diameter", enum_k, "keep only trees of this diameter");
    enum_cmd->add_option("--partition", enum_partition, "run only worker i of m, as i/m");
    enum_cmd->add_flag("--canonical", enum_canonical, "emit canonical forms instead of edge lists");
    enum_cmd->add_flag("--count", enum_count, "emit only the tree count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.validate();
        if (analyze_cmd->parsed()) return run_analyze(aargs, cfg);

        if (verify_cmd->parsed()) return run_verify(verify_id, verify_n, verify_k, cfg);

        if (conj_cmd->parsed()) {
            ConjectureReport rep = conjecture_scan(conj_nmax, cfg.spectral());
            if (cfg.output_format == "csv") std::cout << conjecture_csv(rep);
            else if (cfg.output_format == "json") std::cout << conjecture_json(rep, cfg);
            else throw ValidationError("conjecture supports --format json|csv");
            return 0;
        }

        if (ext_cmd->parsed()) {
            CenterPair pair = parse_pair(ext_pair);
            if (!ext_asym.empty()) {
                std::vector<long long> ns;
                std::string cur;
                for (char c : ext_asym + ",") {
                    if (c == ',') {
                        if (!cur.empty()) ns.push_back(std::stoll(cur));
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                std::cout << asymptotic_csv(pair, asymptotic_series(pair, ns));
                return 0;
            }
            if (ext_n == 0) throw ValidationError("extremal requires --n");
            check_cap(ext_n, cfg);
            std::optional<Partition> part;
            if (!ext_partition.empty()) part = parse_partition(ext_partition);
            ExtremalRecord rec;
            if (part) {
                rec = ext_k ? fixed_diameter_extremal(ext_n, *ext_k, pair, cfg.spectral(), part)
                            : delta_brute(ext_n, pair, cfg.spectral(), part);
            } else if (ext_workers > 1 && !ext_k) {
                rec = delta_brute_parallel(ext_n, pair, cfg.spectral(), ext_workers);
            } else {
                rec = ext_k ? fixed_diameter_extremal(ext_n, *ext_k, pair, cfg.spectral())
                            : delta_brute(ext_n, pair, cfg.spectral());
            }
            if (cfg.output_format == "csv") std::cout << extremal_csv({rec});
            else if (cfg.output_format == "json") std::cout << extremal_json(rec, cfg);
            else throw ValidationError("extremal supports --format json|csv");
            return 0;
        }

        if (enum_cmd->parsed()) {
            check_cap(enum_n, cfg);
            TreeStream s = free_trees(enum_n);
            if (enum_k) s.with_diameter(*enum_k);
            if (!enum_partition.empty()) s.with_partition(parse_partition(enum_partition));
            if (enum_count) {
                std::cout << s.count() << "\n";
                return 0;
            }
            bool first = true;
            s.for_each([&](const Tree& t) {
                if (enum_canonical) {
                    std::cout << render_canonical_form(canonical_form(t)) << "\n";
                } else {
                    if (!first) std::cout << "\n";
                    std::cout << to_edge_list(t);
                }
                first = false;
            });
            return 0;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
