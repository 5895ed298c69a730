#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "treecenters/centers.hpp"
#include "treecenters/enumerate.hpp"
#include "treecenters/perron_exact.hpp"
#include "treecenters/spectral.hpp"

using namespace treecenters;

namespace {

Tree figure1() { return build_path_star({17, 7}); }

}  // namespace

TEST_CASE("laplacian entries") {
    Laplacian k2 = laplacian(build_path(2));
    CHECK(k2.at(0, 0) == 1);
    CHECK(k2.at(0, 1) == -1);
    CHECK(k2.at(1, 0) == -1);
    CHECK(k2.at(1, 1) == 1);

    Laplacian p3 = laplacian(build_path(3));
    CHECK(p3.at(0, 0) == 1);
    CHECK(p3.at(1, 1) == 2);
    CHECK(p3.at(2, 2) == 1);

    Laplacian fig = laplacian(figure1());
    CHECK(fig.at(9, 9) == 8);  // vertex 10
    for (int i = 0; i < fig.n; ++i) {
        long long row = 0;
        for (int j = 0; j < fig.n; ++j) row += fig.at(i, j);
        CHECK(row == 0);
    }
}

TEST_CASE("jacobi solves the P3 laplacian exactly enough") {
    std::vector<double> a = {1, -1, 0, -1, 2, -1, 0, -1, 1};
    EigenResult e = jacobi_eigensymm(a, 3);
    CHECK(std::abs(e.values[0] - 0.0) < 1e-12);
    CHECK(std::abs(e.values[1] - 1.0) < 1e-12);
    CHECK(std::abs(e.values[2] - 3.0) < 1e-12);
}

TEST_CASE("fiedler values of small graphs") {
    CHECK(std::abs(fiedler(build_path(2)).mu - 2.0) < 1e-12);
    CHECK(std::abs(fiedler(build_path(3)).mu - 1.0) < 1e-12);
    FiedlerResult f = fiedler(figure1());
    CHECK(std::abs(f.mu - 0.0483) < 5e-4);
    CHECK(f.residual <= 1e-10 * 17);
    CHECK_THROWS_AS(fiedler(build_from_edges(1, {})), ValidationError);
}

TEST_CASE("fiedler sign-pattern characteristic sets") {
    Tree fig = figure1();
    auto cs = characteristic_set_fiedler(fig, fiedler(fig), 1e-9);
    REQUIRE(cs.has_value());
    CHECK(cs->kind == CharKind::Edge);
    CHECK(cs->u == 7);
    CHECK(cs->v == 8);

    Tree p3 = build_path(3);
    auto v = characteristic_set_fiedler(p3, fiedler(p3), 1e-9);
    REQUIRE(v.has_value());
    CHECK(v->kind == CharKind::Vertex);
    CHECK(v->u == 2);

    Tree p82 = build_path_star({10, 2});
    auto e = characteristic_set_fiedler(p82, fiedler(p82), 1e-9);
    REQUIRE(e.has_value());
    CHECK(e->kind == CharKind::Edge);
    CHECK(e->u == 5);
    CHECK(e->v == 6);
}

TEST_CASE("bottleneck matrices count shared path edges") {
    Tree p3 = build_path(3);
    BottleneckMatrix m = bottleneck_matrix(p3, 3, {1, 2});
    CHECK(m.at(0, 0) == 2);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 1);

    CHECK(bottleneck_matrix(p3, 2, {3}).at(0, 0) == 1);
    Tree star = build_star(5);
    CHECK(bottleneck_matrix(star, 1, {4}).at(0, 0) == 1);

    CHECK_THROWS_WITH_AS(bottleneck_matrix(p3, 3, {1}), doctest::Contains("not a component"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(bottleneck_matrix(p3, 2, {1, 3}), doctest::Contains("not a component"),
                         ValidationError);
}

TEST_CASE("perron values") {
    Tree p3 = build_path(3);
    CHECK(perron_value(bottleneck_matrix(p3, 2, {3})) == 1.0);
    double rho = perron_value(bottleneck_matrix(p3, 3, {1, 2}));
    CHECK(std::abs(rho - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-12);

    double prev = 0.0;
    for (int l = 1; l <= 10; ++l) {
        Tree path = build_path(l + 1);
        std::vector<int> comp;
        for (int v = 1; v <= l; ++v) comp.push_back(v);
        double val = perron_value(bottleneck_matrix(path, l + 1, comp));
        CHECK(val > prev);
        prev = val;
    }
}

TEST_CASE("perron-component characteristic sets") {
    CharacteristicSet p5 = characteristic_set_perron(build_path(5));
    CHECK(p5.kind == CharKind::Vertex);
    CHECK(p5.u == 3);

    CharacteristicSet star = characteristic_set_perron(build_star(4));
    CHECK(star.kind == CharKind::Vertex);
    CHECK(star.u == 1);

    CharacteristicSet fig = characteristic_set_perron(figure1());
    CHECK(fig.kind == CharKind::Edge);
    CHECK(fig.u == 7);
    CHECK(fig.v == 8);

    CharacteristicSet k2 = characteristic_set_perron(build_path(2));
    CHECK(k2.kind == CharKind::Edge);
    CHECK(k2.u == 1);
    CHECK(k2.v == 2);
}

TEST_CASE("both methods agree on every tree to n=9") {
    SpectralConfig cfg;
    for (int n = 2; n <= 9; ++n) {
        free_trees(n).for_each([&](const Tree& t) {
            CharacteristicSet both = characteristic_set(t, cfg);
            CHECK(both.method == CharMethod::CrossValidated);
            auto fied = characteristic_set_fiedler(t, fiedler(t), cfg.zero_tol);
            REQUIRE(fied.has_value());
            CHECK(fied->same_location(both));
        });
    }
}

TEST_CASE("P_{n-2,2} characteristic edges follow the parity split, to n=20") {
    for (int n = 5; n <= 20; ++n) {
        CharacteristicSet cs = characteristic_set(build_path_star({n, 2}));
        CHECK(cs.kind == CharKind::Edge);
        if (n % 2 == 0) {
            CHECK(cs.u == n / 2);
            CHECK(cs.v == n / 2 + 1);
        } else {
            CHECK(cs.u == (n - 1) / 2);
            CHECK(cs.v == (n + 1) / 2);
        }
    }
}

TEST_CASE("outside chi the unique perron component contains chi, to n=9") {
    SpectralConfig cfg;
    for (int n = 2; n <= 9; ++n) {
        free_trees(n).for_each([&](const Tree& t) {
            CharacteristicSet cs = characteristic_set(t, cfg);
            auto chi = cs.vertices();
            for (int v = 1; v <= n; ++v) {
                if (std::find(chi.begin(), chi.end(), v) != chi.end()) continue;
                auto branches = branches_at(t, v);
                int best = -1;
                double best_val = -1.0;
                bool tie = false;
                for (size_t i = 0; i < branches.size(); ++i) {
                    double val = perron_value(bottleneck_matrix(t, v, branches[i].vertices));
                    if (val > best_val * (1 + 1e-9)) {
                        best_val = val;
                        best = static_cast<int>(i);
                        tie = false;
                    } else if (val > best_val * (1 - 1e-9)) {
                        tie = true;
                    }
                }
                CHECK_FALSE(tie);
                for (int u : chi) {
                    CHECK(std::binary_search(branches[best].vertices.begin(),
                                             branches[best].vertices.end(), u));
                }
            }
        });
    }
}

TEST_CASE("mirror symmetry maps chi to itself") {
    for (int n = 4; n <= 12; ++n) {
        CharacteristicSet cs = characteristic_set(build_path(n));
        if (n % 2 == 0) {
            CHECK(cs.kind == CharKind::Edge);
            CHECK(cs.u == n / 2);
            CHECK(cs.v == n / 2 + 1);
        } else {
            CHECK(cs.kind == CharKind::Vertex);
            CHECK(cs.u == (n + 1) / 2);
        }
    }
    for (int l : {2, 3}) {
        for (int k : {2, 3, 4}) {
            Tree t = build_double_broom({l, l, k});
            int n = 2 * l + k;
            auto mirror = [&](int v) {
                if (v <= l) return n - v + 1;             // left pendants <-> right pendants
                if (v > l + k) return n - v + 1;          // and back
                return 2 * l + k + 1 - v;                 // path reverses
            };
            CharacteristicSet cs = characteristic_set(t);
            auto img = cs.vertices();
            for (int& v : img) v = mirror(v);
            std::sort(img.begin(), img.end());
            CHECK(img == cs.vertices());
        }
    }
}

TEST_CASE("exact perron comparison separates and equates correctly") {
    // The one n=10 coincidence: a 4-vertex chair and a 5-vertex spider with
    // exactly equal Perron values (shared factor x^3 - 8x^2 + 6x - 1).
    Tree t = build_from_edges(10, {{1, 6}, {2, 1}, {2, 3}, {3, 4}, {3, 5},
                                   {6, 7}, {6, 9}, {7, 8}, {9, 10}});
    auto branches = branches_at(t, 1);
    REQUIRE(branches.size() == 2);
    double r0 = perron_value(bottleneck_matrix(t, 1, branches[0].vertices));
    double r1 = perron_value(bottleneck_matrix(t, 1, branches[1].vertices));
    CHECK(std::abs(r0 - r1) < 1e-9);
    CHECK(compare_perron_exact(t, 1, branches[0].vertices, r0, branches[1].vertices, r1) ==
          PerronCompare::Equal);
    CHECK(characteristic_set(t).kind == CharKind::Vertex);
    CHECK(characteristic_set(t).u == 1);

    // Distinct values: path components of lengths 3 and 4.
    Tree p8 = build_path(8);
    std::vector<int> left{1, 2, 3}, right{5, 6, 7, 8};
    double rl = perron_value(bottleneck_matrix(p8, 4, left));
    double rr = perron_value(bottleneck_matrix(p8, 4, right));
    CHECK(compare_perron_exact(p8, 4, left, rl, right, rr) == PerronCompare::SecondLarger);
    CHECK(compare_perron_exact(p8, 4, right, rr, left, rl) == PerronCompare::FirstLarger);
}

TEST_CASE("dirichlet characteristic polynomial of the chair component") {
    Tree t = build_from_edges(10, {{1, 6}, {2, 1}, {2, 3}, {3, 4}, {3, 5},
                                   {6, 7}, {6, 9}, {7, 8}, {9, 10}});
    // Chair component {2,3,4,5}: degrees in T are 2,3,1,1, and the Dirichlet
    // matrix has char poly x^4 - 7x^3 + 14x^2 - 9x + 1 (the reciprocal of
    // the bottleneck char poly (x-1)(x^3-8x^2+6x-1)).
    auto p = dirichlet_char_poly(t, {2, 3, 4, 5});
    REQUIRE(p.size() == 5);
    CHECK(p[0] == 1);
    CHECK(p[1] == -9);
    CHECK(p[2] == 14);
    CHECK(p[3] == -7);
    CHECK(p[4] == 1);
}
