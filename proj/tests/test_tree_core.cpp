#include <doctest.h>

#include <algorithm>

#include "treecenters/enumerate.hpp"
#include "treecenters/tree.hpp"

using namespace treecenters;

namespace {

Tree figure1() { return build_path_star({17, 7}); }

}  // namespace

TEST_CASE("build_from_edges accepts small trees") {
    Tree k2 = build_from_edges(2, {{1, 2}});
    CHECK(k2.n == 2);
    CHECK(k2.has_edge(1, 2));

    Tree star = build_from_edges(3, {{1, 2}, {1, 3}});
    CHECK(star.degree(1) == 2);
    CHECK(star.adj[1] == std::vector<int>{2, 3});
}

TEST_CASE("build_from_edges rejects malformed input") {
    CHECK_THROWS_WITH_AS(build_from_edges(4, {{1, 2}, {3, 4}}),
                         doctest::Contains("disconnected"), ValidationError);
    CHECK_THROWS_WITH_AS(build_from_edges(3, {{1, 2}, {1, 2}}),
                         doctest::Contains("duplicate edge (1,2)"), ValidationError);
    CHECK_THROWS_WITH_AS(build_from_edges(3, {{1, 2}, {1, 5}}), doctest::Contains("(1,5)"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(build_from_edges(3, {{1, 2}, {3, 3}}), doctest::Contains("self-loop"),
                         ValidationError);
    CHECK_THROWS_AS(build_from_edges(3, {{1, 2}}), ValidationError);
    CHECK_THROWS_AS(build_from_edges(0, {}), ValidationError);
}

TEST_CASE("path-star labeling follows the figure") {
    Tree t = figure1();
    CHECK(t.n == 17);
    CHECK(t.degree(10) == 8);  // path neighbor 9 plus leaves 11..17
    for (int leaf = 11; leaf <= 17; ++leaf) {
        CHECK(t.degree(leaf) == 1);
        CHECK(t.has_edge(10, leaf));
    }
    for (int i = 1; i < 10; ++i) CHECK(t.has_edge(i, i + 1));

    Tree small = build_path_star({5, 2});
    CHECK(small.has_edge(1, 2));
    CHECK(small.has_edge(2, 3));
    CHECK(small.has_edge(3, 4));
    CHECK(small.has_edge(3, 5));

    CHECK(build_path_star({10, 3}).degree(7) == 4);

    CHECK_THROWS_AS(build_path_star({10, 1}), ValidationError);
    CHECK_THROWS_AS(build_path_star({10, 8}), ValidationError);
}

TEST_CASE("T_{n,k} attaches pendants at the stated path vertex") {
    Tree t = build_tnk(10, 4);
    CHECK(t.n == 10);
    CHECK(diameter(t) == 4);
    CHECK(t.degree(3) == 2 + 5);  // v3 carries the n-k-1 = 5 pendants

    CHECK(canonical_form(build_tnk(5, 4)) == canonical_form(build_path(5)));

    Tree t95 = build_tnk(9, 5);
    CHECK(t95.degree(3) == 2 + 3);  // floor((5+2)/2) = 3
    CHECK(diameter(t95) == 5);

    CHECK_THROWS_AS(build_tnk(10, 2), ValidationError);
    CHECK_THROWS_AS(build_tnk(10, 10), ValidationError);
}

TEST_CASE("double brooms have diameter k+1") {
    CHECK(canonical_form(build_double_broom({1, 1, 2})) == canonical_form(build_path(4)));

    Tree t = build_double_broom({2, 5, 3});
    CHECK(t.n == 10);
    CHECK(diameter(t) == 4);

    CHECK(diameter(build_double_broom({3, 3, 1})) == 2);

    CHECK_THROWS_AS(build_double_broom({0, 1, 2}), ValidationError);
}

TEST_CASE("distances and diameter") {
    Tree p3 = build_path(3);
    auto d = distances_from(p3, 1);
    CHECK(d[1] == 0);
    CHECK(d[2] == 1);
    CHECK(d[3] == 2);

    auto d6 = distances_from(figure1(), 6);
    CHECK(*std::max_element(d6.begin() + 1, d6.end()) == 5);

    Tree star = build_star(5);
    auto ds = distances_from(star, 1);
    for (int leaf = 2; leaf <= 5; ++leaf) CHECK(ds[leaf] == 1);

    CHECK(diameter(build_path(9)) == 8);
    CHECK(diameter(build_tnk(10, 4)) == 4);
    for (int k = 3; k <= 7; ++k) CHECK(diameter(build_path_star({10, 10 - k})) == k);

    CHECK_THROWS_AS(distances_from(p3, 4), ValidationError);
}

TEST_CASE("central distance is a min-min set distance") {
    Tree t = figure1();
    CHECK(central_distance(t, {6}, {7, 8}) == 1);
    CHECK(central_distance(t, {9}, {7, 8}) == 1);
    CHECK(central_distance(t, {9}, {9}) == 0);
    CHECK(central_distance(t, {6}, {10}) == 4);
    CHECK(central_distance(t, {10}, {6}) == 4);
    CHECK_THROWS_AS(central_distance(t, {}, {1}), ValidationError);
}

TEST_CASE("branches_at partitions the rest of the tree") {
    Tree p3 = build_path(3);
    auto b = branches_at(p3, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].vertices == std::vector<int>{1});
    CHECK(b[1].vertices == std::vector<int>{3});

    auto fig = branches_at(figure1(), 9);
    REQUIRE(fig.size() == 2);
    CHECK(fig[0].vertices.size() == 8);
    CHECK(fig[1].vertices.size() == 8);

    auto star = branches_at(build_star(6), 1);
    CHECK(star.size() == 5);
    for (const auto& br : star) CHECK(br.vertices.size() == 1);
}

TEST_CASE("branch partition and edge-count invariants, exhaustively") {
    for (int n = 1; n <= 8; ++n) {
        free_trees(n).for_each([&](const Tree& t) {
            for (int v = 1; v <= n; ++v) {
                auto bs = branches_at(t, v);
                int verts = 0, edges = 0;
                for (const auto& b : bs) {
                    verts += static_cast<int>(b.vertices.size());
                    edges += b.edge_count;
                }
                CHECK(verts == n - 1);
                CHECK(edges + t.degree(v) == n - 1);
            }
        });
    }
}

TEST_CASE("diameter equals the max eccentricity, exhaustively to n=9") {
    for (int n = 1; n <= 9; ++n) {
        free_trees(n).for_each([&](const Tree& t) {
            int best = 0;
            for (int v = 1; v <= n; ++v) {
                auto d = distances_from(t, v);
                best = std::max(best, *std::max_element(d.begin() + 1, d.end()));
            }
            CHECK(diameter(t) == best);
        });
    }
}

TEST_CASE("family builders re-validate") {
    for (const Tree& t : {figure1(), build_tnk(12, 5), build_double_broom({3, 4, 5})}) {
        Tree again = build_from_edges(t.n, t.edges());
        CHECK(again.adj == t.adj);
    }
}
