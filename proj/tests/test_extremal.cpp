#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "treecenters/centers.hpp"
#include "treecenters/extremal.hpp"

using namespace treecenters;

namespace {

const CenterPair kCCd = make_pair_normalized(CenterKind::Center, CenterKind::Centroid);
const CenterPair kCSc = make_pair_normalized(CenterKind::Center, CenterKind::SubtreeCore);
const CenterPair kCdSc = make_pair_normalized(CenterKind::Centroid, CenterKind::SubtreeCore);
const CenterPair kScChi =
    make_pair_normalized(CenterKind::SubtreeCore, CenterKind::CharacteristicSet);

}  // namespace

TEST_CASE("g0 is the smallest g with 2^g + 1 > n - g") {
    CHECK(g0(5) == 2);
    CHECK(g0(10) == 3);
    CHECK(g0(17) == 4);
    CHECK(g0(10000) == 14);
}

TEST_CASE("pair parsing and naming") {
    CHECK(pair_name(kScChi) == "Sc-chi");
    CHECK(pair_name(make_pair_normalized(CenterKind::CharacteristicSet,
                                         CenterKind::SubtreeCore)) == "Sc-chi");
    CHECK(*kind_from_token("score") == CenterKind::SubtreeCore);
    CHECK(*kind_from_token("CENTER") == CenterKind::Center);
    CHECK(!kind_from_token("middle").has_value());
}

TEST_CASE("closed forms at pinned values") {
    CHECK(*delta_formula(10, kCCd) == 1);
    CHECK(*delta_formula(10, kCSc) == 2);
    CHECK(*delta_formula(10, kCdSc) == 1);
    CHECK(*delta_formula(13, kCCd) == 2);
    CHECK(*delta_formula(17, kCdSc) == 4);
    CHECK(!delta_formula(10, kScChi).has_value());
    CHECK_THROWS_AS(delta_formula(4, kCCd), ValidationError);
}

TEST_CASE("brute force equals the closed forms for n=5..10") {
    for (int n = 5; n <= 10; ++n) {
        for (CenterPair pair : {kCCd, kCSc, kCdSc}) {
            ExtremalRecord rec = delta_brute(n, pair);
            CHECK(rec.max_distance == *delta_formula(n, pair));
            CHECK(!rec.witnesses.empty());
        }
    }
}

TEST_CASE("every witness re-checks to the recorded distance") {
    SpectralConfig cfg;
    for (CenterPair pair : {kCCd, kScChi}) {
        ExtremalRecord rec = delta_brute(9, pair, cfg);
        for (const auto& w : rec.witnesses) {
            Tree t = tree_from_canonical_form(w);
            int d = central_distance(t, central_vertices(t, pair.first, cfg),
                                     central_vertices(t, pair.second, cfg));
            CHECK(d == rec.max_distance);
        }
    }
}

TEST_CASE("partitioned and parallel brute force match the single stream") {
    ExtremalRecord single = delta_brute(9, kCSc);
    ExtremalRecord merged;
    bool first = true;
    for (int w = 0; w < 3; ++w) {
        ExtremalRecord part = delta_brute(9, kCSc, {}, Partition{w, 3});
        merged = first ? part : merge_records(std::move(merged), part);
        first = false;
    }
    CHECK(merged.max_distance == single.max_distance);
    CHECK(merged.witnesses == single.witnesses);
    CHECK(merged.trees_examined == single.trees_examined);

    ExtremalRecord par = delta_brute_parallel(9, kCSc, {}, 4);
    CHECK(par.max_distance == single.max_distance);
    CHECK(par.witnesses == single.witnesses);
}

TEST_CASE("delta is monotone over the tested range (observation, not theorem)") {
    for (CenterPair pair : {kCCd, kCSc, kCdSc}) {
        int prev = 0;
        for (int n = 5; n <= 10; ++n) {
            int cur = delta_brute(n, pair).max_distance;
            WARN_GE(cur, prev);
            prev = cur;
        }
    }
}

TEST_CASE("path-star maximizer verifier, n=5..10") {
    VerifyReport rep = verify_pathstar_maximizer(5, 10);
    CHECK(rep.pass);
    CHECK(rep.statements.size() == 6);
}

TEST_CASE("collinearity on path-stars, n<=14") {
    VerifyReport rep = verify_collinearity(14);
    CHECK(rep.pass);

    // P_{8,2} explicitly: all four parts sit inside path positions 5..7
    Tree t = build_path_star({10, 2});
    CHECK(center(t).vertices == std::vector<int>{5});
    CHECK(centroid(t).vertices == std::vector<int>{5, 6});
    CHECK(subtree_core(t).vertices == std::vector<int>{6});
    CharacteristicSet cs = characteristic_set(t);
    CHECK(cs.kind == CharKind::Edge);
    CHECK(cs.u == 5);
    CHECK(cs.v == 6);
}

TEST_CASE("characteristic-set movement lemmas, n=12 and base cases to n=20") {
    VerifyReport rep = verify_cs_movement(12, 12);
    CHECK(rep.pass);
    CHECK(rep.statements.size() > 10);
    VerifyReport bases = verify_cs_movement(7, 20);
    CHECK(bases.pass);
}

TEST_CASE("coincidence verifier") {
    VerifyReport rep = verify_coincidence(5, 10);
    CHECK(rep.pass);
    CHECK(rep.statements.size() == 6);
}

TEST_CASE("T_{n,k} makes all six pairwise distances zero, n<=10") {
    VerifyReport rep = verify_gamma_min(4, 10);
    CHECK(rep.pass);
}

TEST_CASE("P_{k,n-k} attains the gamma maximum for (C,chi), n<=10") {
    VerifyReport rep = verify_gamma_c_chi(4, 10);
    CHECK(rep.pass);
}

TEST_CASE("double brooms attain the gamma maximum for (Cd,chi), n<=10") {
    VerifyReport rep = verify_gamma_cd_chi(5, 10);
    CHECK(rep.pass);
}

TEST_CASE("fixed-diameter search validates arguments") {
    CHECK_THROWS_AS(fixed_diameter_extremal(10, 2, kCCd), ValidationError);
    CHECK_THROWS_AS(fixed_diameter_extremal(10, 10, kCCd), ValidationError);
    ExtremalRecord rec = fixed_diameter_extremal(8, 4, kCCd);
    CHECK(rec.diameter == 4);
    CHECK(rec.trees_examined == free_trees_with_diameter(8, 4).count());
}

TEST_CASE("conjecture scan reports edges everywhere, n<=20") {
    ConjectureReport rep = conjecture_scan(20);
    CHECK(rep.counterexamples.empty());
    size_t expected_entries = 0;
    for (int n = 5; n <= 20; ++n) expected_entries += static_cast<size_t>(n - 4);
    CHECK(rep.entries.size() == expected_entries);
    for (const auto& e : rep.entries) {
        CHECK_FALSE(e.unresolved);
        CHECK(e.cs->kind == CharKind::Edge);
    }
}

TEST_CASE("asymptotic tables evaluate the formulas") {
    auto cc = asymptotic_series(kCCd, {10000});
    CHECK(cc[0].lo == 2499);
    CHECK(cc[0].hi == 2499);

    auto csc = asymptotic_series(kCSc, {10000});
    CHECK(csc[0].lo == 4992);

    auto cdsc = asymptotic_series(kCdSc, {10000});
    CHECK(cdsc[0].lo == 4985);

    auto sandwich = asymptotic_series(kScChi, {10000});
    CHECK(sandwich[0].lo == 4985);
    CHECK(sandwich[0].hi == 4992);

    CHECK_THROWS_AS(
        asymptotic_series(make_pair_normalized(CenterKind::Center,
                                               CenterKind::CharacteristicSet),
                          {100}),
        ValidationError);
}

TEST_CASE("verify reports track failures") {
    VerifyReport rep;
    rep.verifier = "demo";
    rep.add("a", true, "");
    CHECK(rep.pass);
    rep.add("b", false, "broken");
    CHECK_FALSE(rep.pass);
    CHECK(rep.statements.size() == 2);
}
