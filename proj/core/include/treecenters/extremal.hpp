// extremal.hpp — brute-force delta_n tables with witnesses, closed-form
// checks, the path-star maximizer / collinearity / movement verifiers, the
// conjecture scanner, and fixed-diameter extremal search.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecenters/enumerate.hpp"
#include "treecenters/spectral.hpp"
#include "treecenters/tree.hpp"

namespace treecenters {

enum class CenterKind { Center, Centroid, SubtreeCore, CharacteristicSet };

// Normalized so first <= second in enum order.
using CenterPair = std::pair<CenterKind, CenterKind>;
CenterPair make_pair_normalized(CenterKind a, CenterKind b);
std::string kind_name(CenterKind k);            // C, Cd, Sc, chi
std::string pair_name(CenterPair p);            // e.g. "Sc-chi"
std::optional<CenterKind> kind_from_token(const std::string& token);

std::vector<int> central_vertices(const Tree& t, CenterKind kind, const SpectralConfig& cfg);

// Row of a delta_n table: the maximum distance between the two central parts
// over the searched family, with every maximizer kept as a canonical form.
struct ExtremalRecord {
    int n = 0;
    CenterPair pair;
    int max_distance = -1;
    std::vector<std::string> witnesses;  // canonical forms, sorted
    std::optional<int> diameter;
    std::uint64_t trees_examined = 0;
};
ExtremalRecord merge_records(ExtremalRecord a, const ExtremalRecord& b);

// Smallest positive g with 2^g + 1 > n - g.
int g0(long long n);

ExtremalRecord delta_brute(int n, CenterPair pair, const SpectralConfig& cfg = {},
                           std::optional<Partition> part = std::nullopt);
ExtremalRecord delta_brute_parallel(int n, CenterPair pair, const SpectralConfig& cfg,
                                    int workers);
// Closed forms: C-Cd -> floor((n-3)/4); C-Sc -> floor((n-g0)/2)-1;
// Cd-Sc -> floor((n-1)/2)-g0. Pairs involving chi have none.
std::optional<long long> delta_formula(long long n, CenterPair pair);

ExtremalRecord fixed_diameter_extremal(int n, int k, CenterPair pair,
                                       const SpectralConfig& cfg = {},
                                       std::optional<Partition> part = std::nullopt);

struct Statement {
    std::string id;
    bool pass = false;
    std::string detail;
};
struct VerifyReport {
    std::string verifier;
    std::vector<Statement> statements;
    bool pass = true;

    void add(std::string id, bool ok, std::string detail = "");
};

VerifyReport verify_delta_formulas(CenterPair pair, int n_min, int n_max,
                                   const SpectralConfig& cfg = {});
VerifyReport verify_pathstar_maximizer(int n_min, int n_max, const SpectralConfig& cfg = {});
VerifyReport verify_collinearity(int n_max, const SpectralConfig& cfg = {});
VerifyReport verify_cs_movement(int n_min, int n_max, const SpectralConfig& cfg = {});
VerifyReport verify_coincidence(int n_min, int n_max);
VerifyReport verify_gamma_min(int n_min, int n_max, const SpectralConfig& cfg = {});
VerifyReport verify_gamma_c_chi(int n_min, int n_max, const SpectralConfig& cfg = {});
VerifyReport verify_gamma_cd_chi(int n_min, int n_max, const SpectralConfig& cfg = {});

// chi(P_{n-g,g}) for every 5 <= n <= n_max, 2 <= g <= n-3. Vertex outcomes
// (and unresolved Perron ties) are data, not errors.
struct ConjectureEntry {
    int n = 0;
    int g = 0;
    bool unresolved = false;
    std::optional<CharacteristicSet> cs;  // empty only when unresolved
    std::string note;
};
struct ConjectureReport {
    int n_max = 0;
    std::vector<ConjectureEntry> entries;
    std::vector<size_t> counterexamples;  // indices into entries
};
ConjectureReport conjecture_scan(int n_max, const SpectralConfig& cfg = {});

// Formula-based table rows; lo == hi for pairs with a closed form, and the
// sandwich delta(Cd,Sc) <= delta(chi,Sc) <= delta(C,Sc) brackets Sc-chi.
struct AsymptoticRow {
    long long n = 0;
    long long lo = 0;
    long long hi = 0;
};
std::vector<AsymptoticRow> asymptotic_series(CenterPair pair, const std::vector<long long>& ns);

}  // namespace treecenters
