// spectral.hpp — Laplacian, Fiedler vector, bottleneck matrices, Perron
// components, and the characteristic set computed by two independent methods
// with mandatory cross-validation.
#pragma once

#include <optional>
#include <vector>

#include "treecenters/tree.hpp"

namespace treecenters {

// L = D - A, exact integers, 0-based rows (row i <-> vertex i+1).
struct Laplacian {
    int n = 0;
    std::vector<long long> m;  // row-major n*n
    long long at(int i, int j) const { return m[static_cast<size_t>(i) * n + j]; }
};
Laplacian laplacian(const Tree& t);

// Dense symmetric eigensolver (cyclic Jacobi). Input row-major n*n,
// only assumed symmetric. Eigenvalues ascending; eigenvector k is
// vectors[k*n .. k*n+n-1]. Deterministic.
struct EigenResult {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;  // row-major, one eigenvector per row
};
EigenResult jacobi_eigensymm(const std::vector<double>& a, int n);

struct FiedlerResult {
    double mu = 0.0;          // algebraic connectivity
    std::vector<double> y;    // Fiedler vector, 1-based (y[0] unused)
    double residual = 0.0;    // ||L y - mu y||_inf
};
// Second-smallest Laplacian eigenpair; requires n >= 2. Enforces
// orthogonality to the all-ones vector, unit norm, and residual <= 1e-10*n.
FiedlerResult fiedler(const Tree& t);

enum class CharKind { Vertex, Edge };
enum class CharMethod { Fiedler, Perron, CrossValidated };

struct CharacteristicSet {
    CharKind kind;
    int u = 0;
    int v = 0;  // 0 when kind == Vertex; u < v when Edge
    CharMethod method = CharMethod::CrossValidated;

    std::vector<int> vertices() const;
    bool same_location(const CharacteristicSet& o) const {
        return kind == o.kind && u == o.u && v == o.v;
    }
};

// Sign-pattern route: the characteristic vertex is the zero entry with a
// nonzero neighbor; otherwise the unique sign-change edge. Entries are
// "zero" below zero_tol * ||Y||_inf. Returns nullopt when the pattern is
// ambiguous (the Perron method then arbitrates).
std::optional<CharacteristicSet> characteristic_set_fiedler(const Tree& t,
                                                            const FiedlerResult& f,
                                                            double zero_tol);

// Inverse of the principal Laplacian submatrix of one component of T - v;
// entry (i,j) counts the edges shared by the paths from i and j to v
// (exact integers). Rows follow `vertices`, sorted ascending.
struct BottleneckMatrix {
    std::vector<int> vertices;
    std::vector<long long> m;  // row-major dim*dim
    int dim() const { return static_cast<int>(vertices.size()); }
    long long at(int i, int j) const { return m[static_cast<size_t>(i) * vertices.size() + j]; }
};
// `component` must be exactly a connected component of T - v. The result is
// verified against the Laplacian submatrix in exact integer arithmetic.
BottleneckMatrix bottleneck_matrix(const Tree& t, int v, const std::vector<int>& component);

// Spectral radius by power iteration with Collatz-Wielandt bounds,
// deterministic all-ones start.
double perron_value(const BottleneckMatrix& m, double rel_tol = 1e-13);

struct SpectralConfig {
    double zero_tol = 1e-9;    // Fiedler zero threshold, relative to ||Y||_inf
    double perron_tol = 1e-13; // power iteration relative tolerance
    double tie_tol = 1e-9;     // Perron values within this relative gap are tie candidates
};

// Walks unique Perron components until it reaches a vertex with two or more
// Perron components (Vertex) or a mutually-Perron adjacent pair (Edge).
// Near-ties are accepted only when the tied components are isomorphic as
// rooted trees (an exact check); otherwise SolverError.
CharacteristicSet characteristic_set_perron(const Tree& t, const SpectralConfig& cfg = {});

// Runs both methods. Agreement -> method CrossValidated; a Fiedler
// ambiguity defers to the Perron result; disagreement is an InvariantError
// carrying both answers.
CharacteristicSet characteristic_set(const Tree& t, const SpectralConfig& cfg = {});

int central_distance(const Tree& t, const CharacteristicSet& a, const CentralSet& b);

}  // namespace treecenters
