// reports.hpp — whole-tree analysis and deterministic report emission
// (JSON / CSV / text / DOT). Identical inputs and config produce
// byte-identical output, independent of worker counts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treecenters/centers.hpp"
#include "treecenters/extremal.hpp"
#include "treecenters/spectral.hpp"
#include "treecenters/tree.hpp"

namespace treecenters {

struct Config {
    double zero_tol = 1e-9;
    double perron_tol = 1e-13;
    double tie_tol = 1e-9;
    int brute_cap = 14;  // max n for exhaustive enumeration, <= kEnumerationCap
    std::string output_format = "json";  // json | csv | dot | text

    SpectralConfig spectral() const { return {zero_tol, perron_tol, tie_tol}; }
    void validate() const;
};

struct AnalyzeResult {
    Tree tree;
    std::string family;  // human-readable description of the input
    CentralSet center;
    CentralSet centroid;
    CentralSet median;
    CentralSet telephone;
    CentralSet core;
    std::vector<BigCount> subtree_f;          // 1-based
    std::optional<FiedlerResult> fiedler;     // present iff n >= 2
    std::optional<CharacteristicSet> chi;     // present iff n >= 2
    // The six pairwise distances, fixed order; chi rows absent when n < 2.
    std::vector<std::pair<std::string, int>> distances;
};

AnalyzeResult analyze(const Tree& t, const Config& cfg, std::string family = "");

std::string analyze_json(const AnalyzeResult& r, const Config& cfg);
std::string analyze_text(const AnalyzeResult& r, const Config& cfg);
// DOT with the central parts color-coded.
std::string analyze_dot(const AnalyzeResult& r);

std::string verify_json(const VerifyReport& r, const Config& cfg);
std::string verify_text(const VerifyReport& r, const Config& cfg);

std::string extremal_json(const ExtremalRecord& r, const Config& cfg);
// Header: n,pair,diameter,delta_brute,delta_formula,match,witness_count
std::string extremal_csv(const std::vector<ExtremalRecord>& rows);

std::string conjecture_json(const ConjectureReport& r, const Config& cfg);
std::string conjecture_csv(const ConjectureReport& r);

std::string asymptotic_csv(CenterPair pair, const std::vector<AsymptoticRow>& rows);

}  // namespace treecenters
