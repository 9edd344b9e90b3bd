#include <doctest.h>

#include <algorithm>
#include <set>

#include "wschub/schubert.hpp"
#include "wschub/tableau.hpp"

using namespace wschub;

namespace {

// Weyl dimension formula for the shape's highest weight, used only as an
// enumeration oracle: product over boxes of (n + col - row) / hook.
long long weyl_dimension(const StaircaseShape& shape, int n) {
    long long num = 1, den = 1;
    std::vector<int> conj(shape.num_cols(), 0);
    for (int len : shape.rows)
        for (int c = 0; c < len; ++c) ++conj[c];
    for (int i = 0; i < shape.num_rows(); ++i) {
        for (int j = 0; j < shape.rows[i]; ++j) {
            num *= n + j - i;
            den *= (shape.rows[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    return num / den;
}

std::multiset<std::vector<int>> weight_multiset(const FlagConfig& cfg) {
    std::multiset<std::vector<int>> ms;
    for (const Tableau& t : enumerate_tableaux(StaircaseShape::of(cfg), cfg.n))
        ms.insert(t.weight(cfg.n));
    return ms;
}

}  // namespace

TEST_SUITE("tableau") {

TEST_CASE("staircase shapes") {
    CHECK(StaircaseShape::of(FlagConfig(3, {1, 2})).rows == std::vector<int>({2, 1}));
    CHECK(StaircaseShape::of(FlagConfig(2, {1})).rows == std::vector<int>({1}));
    CHECK(StaircaseShape::of(FlagConfig(4, {1, 3})).rows == std::vector<int>({2, 1, 1}));
    CHECK(StaircaseShape::of(FlagConfig(4, {1, 2, 3})).rows == std::vector<int>({3, 2, 1}));
    StaircaseShape s = StaircaseShape::of(FlagConfig(4, {1, 3}));
    CHECK(s.col_height(1) == 3);
    CHECK(s.col_height(2) == 1);
    CHECK(s.boxes() == 4);
}

TEST_CASE("enumeration counts") {
    auto tabs = enumerate_tableaux(StaircaseShape::of(FlagConfig(3, {1, 2})), 3);
    REQUIRE(tabs.size() == 8);
    CHECK(std::any_of(tabs.begin(), tabs.end(),
                      [](const Tableau& t) { return t.to_string() == "[[1,1],[2]]"; }));
    CHECK(std::any_of(tabs.begin(), tabs.end(),
                      [](const Tableau& t) { return t.to_string() == "[[2,3],[3]]"; }));
    auto single = enumerate_tableaux(StaircaseShape::of(FlagConfig(2, {1})), 2);
    REQUIRE(single.size() == 2);
    CHECK(single[0].to_string() == "[[1]]");
    CHECK(single[1].to_string() == "[[2]]");
    // Grassmannian shapes: one column of height k, C(n,k) fillings
    CHECK(enumerate_tableaux(StaircaseShape::of(FlagConfig(4, {2})), 4).size() == 6);
    CHECK(enumerate_tableaux(StaircaseShape::of(FlagConfig(5, {2})), 5).size() == 10);
    for (const FlagConfig& cfg :
         {FlagConfig(3, {1, 2}), FlagConfig(4, {1, 3}), FlagConfig(4, {2}), FlagConfig(4, {1, 2, 3})}) {
        StaircaseShape shape = StaircaseShape::of(cfg);
        CHECK(static_cast<long long>(enumerate_tableaux(shape, cfg.n).size()) ==
              weyl_dimension(shape, cfg.n));
    }
    for (const Tableau& t : enumerate_tableaux(StaircaseShape::of(FlagConfig(4, {1, 3})), 4))
        CHECK(t.is_semistandard(4));
}

TEST_CASE("weights") {
    FlagConfig cfg(3, {1, 2});
    auto tabs = enumerate_tableaux(StaircaseShape::of(cfg), 3);
    CHECK(tabs[0].weight(3) == std::vector<int>({2, 1, 0}));
    CHECK(tabs[0].weight_string(3, false) == "t1^2*t2");
    CHECK(tabs[7].weight_string(3, false) == "t2*t3^2");
    // the two constant-content fillings normalize to 1
    CHECK(tabs[3].weight_string(3, false) == "t1*t2*t3");
    CHECK(tabs[3].weight_string(3, true) == "1");
    WeightData zero({0, 0, 0}, 5, cfg);
    for (const Tableau& t : tabs) CHECK(t.total_weight(zero) == 5);
    WeightData wd({1, 2, 3}, 1, cfg);
    CHECK(tabs[0].total_weight(wd) == 1 + 1 + 2 + 1);
}

TEST_CASE("character symmetry") {
    for (const FlagConfig& cfg : {FlagConfig(3, {1, 2}), FlagConfig(4, {2}), FlagConfig(4, {1, 3})}) {
        auto ms = weight_multiset(cfg);
        // closed under permuting the t coordinates
        for (int i = 0; i + 1 < cfg.n; ++i) {
            std::multiset<std::vector<int>> swapped;
            for (std::vector<int> e : ms) {
                std::swap(e[i], e[i + 1]);
                swapped.insert(e);
            }
            CHECK(ms == swapped);
        }
    }
}

TEST_CASE("tableau of a representative") {
    CosetSystem full3(FlagConfig(3, {1, 2}));
    Tableau y0 = tableau_of_perm(Permutation(), full3);
    CHECK(y0.to_string() == "[[1,1],[2]]");  // row i filled with i
    CosetSystem full4(FlagConfig(4, {1, 2, 3}));
    CHECK(tableau_of_perm(Permutation({1, 4, 2, 3}), full4).weight_string(4, false) ==
          "t1^3*t2*t4^2");
    CosetSystem gr24(FlagConfig(4, {2}));
    CHECK_THROWS_AS(tableau_of_perm(Permutation({2, 1, 3, 4}), gr24), std::invalid_argument);
    for (const FlagConfig& cfg : {FlagConfig(4, {1, 3}), FlagConfig(4, {2}), FlagConfig(3, {1, 2})}) {
        CosetSystem system(cfg);
        std::set<std::string> images;
        for (const Permutation& s : system.reps())
            images.insert(tableau_of_perm(s, system).to_string());
        CHECK(static_cast<int>(images.size()) == system.size());  // injective
    }
}

TEST_CASE("total weight matches the chi-weighted sum over the word") {
    for (const FlagConfig& cfg : {FlagConfig(3, {1, 2}), FlagConfig(4, {1, 3}), FlagConfig(4, {2})}) {
        CosetSystem system(cfg);
        std::vector<long long> w(cfg.n);
        for (int i = 0; i < cfg.n; ++i) w[i] = i + 1;
        WeightData wd(w, 1, cfg);
        for (const Permutation& s : system.reps())
            CHECK(tableau_of_perm(s, system).total_weight(wd) == rep_total_weight(s, cfg, wd));
    }
}

TEST_CASE("minor products") {
    UniversePtr u = make_universe(3);
    Tableau box;
    box.shape.rows = {1};
    box.rows = {{2}};
    CHECK(pluecker_polynomial(box, u) == Polynomial::variable(u, u->xg(1, 2)));

    FlagConfig cfg(3, {1, 2});
    auto tabs = enumerate_tableaux(StaircaseShape::of(cfg), 3);
    CHECK(pluecker_polynomial(tabs[0], u) ==
          Polynomial::parse(u, "xg1_1^2*xg2_2 - xg1_1*xg1_2*xg2_1"));
    // every monomial uses each tableau entry as a column index, with multiplicity
    for (const Tableau& t : tabs) {
        std::vector<int> expected = t.weight(3);
        Polynomial e_y = pluecker_polynomial(t, u);
        for (const auto& [m, c] : e_y.terms()) {
            std::vector<int> cols(3, 0);
            for (const auto& [v, e] : m.factors)
                for (int j = 1; j <= 3; ++j)
                    for (int i = 1; i <= 3; ++i)
                        if (v == u->xg(i, j)) cols[j - 1] += e;
            CHECK(cols == expected);
        }
    }
}

TEST_CASE("admissible shift") {
    FlagConfig p2(2, {1});
    CHECK(min_admissible_u({0, 0}, p2) == 1);
    CHECK(min_admissible_u({-3, 5}, p2) == 4);
    CHECK(min_admissible_u({1, 2}, p2) == 0);
    CHECK_THROWS_AS(WeightData({-3, 5}, 3, p2), std::invalid_argument);
    CHECK_NOTHROW(WeightData({-3, 5}, 4, p2));
    CHECK_THROWS_AS(min_admissible_u({0}, p2), std::invalid_argument);
}

}  // TEST_SUITE
