#include <doctest.h>

#include <numeric>

#include "wschub/schubert.hpp"

using namespace wschub;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> all;
    do {
        all.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return all;
}

Polynomial xsum(const UniversePtr& u, int d) {
    Polynomial p(u);
    for (int i = 1; i <= d; ++i) p += Polynomial::variable(u, u->x(i));
    return p;
}

Polynomial bsum(const UniversePtr& u, int d) {
    Polynomial p(u);
    for (int i = 1; i <= d; ++i) p += Polynomial::variable(u, u->b(i));
    return p;
}

// Exact rank of the coefficient matrix of the given polynomials.
int rational_rank(const std::vector<Polynomial>& polys) {
    std::map<Monomial, int, MonomialDescending> columns;
    for (const Polynomial& p : polys)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, 0);
    int k = 0;
    for (auto& [m, idx] : columns) idx = k++;
    std::vector<std::vector<Rational>> rows;
    for (const Polynomial& p : polys) {
        std::vector<Rational> row(columns.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) row[columns.at(m)] = c;
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t col = 0;
    while (col < columns.size() && rank < static_cast<int>(rows.size())) {
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = static_cast<int>(r); break; }
        if (pivot < 0) { ++col; continue; }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t cc = col; cc < columns.size(); ++cc)
                rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
        ++col;
    }
    return rank;
}

}  // namespace

TEST_SUITE("schubert") {

TEST_CASE("single polynomial shapes") {
    SchubertEngine eng(make_universe(4));
    const UniversePtr& u = eng.universe();
    CHECK(eng.schubert(Permutation(), 3) == Polynomial::constant(u, 1));
    CHECK(eng.schubert(Permutation::simple(1), 3) == xsum(u, 1));
    CHECK(eng.schubert(Permutation::simple(2), 3) == xsum(u, 2));
    CHECK(eng.schubert(Permutation({3, 2, 1}), 3) ==
          Polynomial::variable(u, u->x(1), 2) * Polynomial::variable(u, u->x(2)));
    CHECK(eng.schubert(Permutation({3, 1, 2}), 3) == Polynomial::variable(u, u->x(1), 2));
}

TEST_CASE("stability across the ambient size") {
    SchubertEngine eng(make_universe(4));
    for (const Permutation& s : symmetric_group(3)) {
        CHECK(eng.schubert(s, 3) == eng.schubert(s, 4));
        CHECK(eng.double_schubert(s, 3) == eng.double_schubert(s, 4));
    }
}

TEST_CASE("divided-difference descent is path independent") {
    SchubertEngine eng(make_universe(4));
    for (const Permutation& s : symmetric_group(4)) {
        for (int i = 1; i <= 3; ++i) {
            if (s(i) > s(i + 1)) continue;  // need an ascent
            Permutation parent = s * Permutation::simple(i);
            CHECK(divided_difference(eng.schubert(parent, 4), i) == eng.schubert(s, 4));
            CHECK(divided_difference(eng.double_schubert(parent, 4), i) ==
                  eng.double_schubert(s, 4));
        }
    }
}

TEST_CASE("double polynomial examples") {
    SchubertEngine eng(make_universe(4));
    const UniversePtr& u = eng.universe();
    CHECK(eng.double_schubert(Permutation(), 3) == Polynomial::constant(u, 1));
    for (int d : {1, 2})
        CHECK(eng.double_schubert(Permutation::simple(d), 3) == xsum(u, d) - bsum(u, d));
    CHECK(eng.double_schubert(Permutation({2, 1}), 2) ==
          Polynomial::variable(u, u->x(1)) - Polynomial::variable(u, u->b(1)));
}

TEST_CASE("setting b to zero recovers the single polynomial") {
    SchubertEngine eng(make_universe(4));
    const UniversePtr& u = eng.universe();
    std::map<int, Polynomial> b_to_zero;
    for (int i = 1; i <= 5; ++i) b_to_zero.emplace(u->b(i), Polynomial(u));
    for (const Permutation& s : symmetric_group(4))
        CHECK(eng.double_schubert(s, 4).substitute(b_to_zero) == eng.schubert(s, 4));
}

TEST_CASE("route agreement on S_3") {
    SchubertEngine eng(make_universe(3));
    for (const Permutation& s : symmetric_group(3))
        CHECK(eng.double_schubert(s, 3, SchubertEngine::DoubleRoute::SumFormula) ==
              eng.double_schubert(s, 3, SchubertEngine::DoubleRoute::DividedDifference));
}

TEST_CASE("linear independence through degree 3") {
    SchubertEngine eng(make_universe(4));
    std::vector<Polynomial> polys;
    for (const Permutation& s : symmetric_group(4))
        if (s.length() <= 3) polys.push_back(eng.double_schubert(s, 4));
    CHECK(rational_rank(polys) == static_cast<int>(polys.size()));
}

TEST_CASE("fixed-point specialization") {
    SchubertEngine eng(make_universe(4));
    const UniversePtr& u = eng.universe();
    CosetSystem full(FlagConfig(4, {1, 2, 3}));
    for (const Permutation& tau : full.reps())
        CHECK(eng.kaji_specialize(Permutation(), tau, 4) == Polynomial::constant(u, 1));
    for (const Permutation& s : full.reps()) {
        for (const Permutation& tau : full.reps()) {
            Polynomial value = eng.kaji_specialize(s, tau, 4);
            if (!bruhat_leq(s, tau)) {
                CHECK(value.is_zero());
            } else if (tau == s) {
                Polynomial expected = Polynomial::constant(u, 1);
                for (const auto& [i, j] : s.inversions())
                    expected = expected * (Polynomial::variable(u, u->b(s(i))) -
                                           Polynomial::variable(u, u->b(s(j))));
                CHECK(value == expected);
            }
        }
    }
}

TEST_CASE("weighted substitution maps are mutually inverse") {
    FlagConfig cfg(3, {1, 2});
    UniversePtr u = make_universe(3);
    WeightedSubstitution ws(cfg, WeightData({2, 0, 1}, 3, cfg), u);
    auto fwd = ws.forward();
    auto inv = ws.inverse();
    for (int l = 1; l <= 4; ++l) {
        Polynomial b = Polynomial::variable(u, u->b(l));
        Polynomial bw = Polynomial::variable(u, u->bw(l));
        CHECK(b.substitute(fwd).substitute(inv) == b);
        CHECK(bw.substitute(inv).substitute(fwd) == bw);
    }
    // and on mixed monomials of degree <= 3
    Polynomial f = Polynomial::variable(u, u->x(1)) * Polynomial::variable(u, u->b(2)) +
                   Polynomial::variable(u, u->b(1), 2) * Polynomial::variable(u, u->b(3));
    CHECK(f.substitute(fwd).substitute(inv) == f);
    CHECK_THROWS_AS(WeightedSubstitution(cfg, WeightData({2, 1, 1}, 0, cfg), u),
                    std::invalid_argument);
}

TEST_CASE("weighted polynomials") {
    FlagConfig cfg(3, {1, 2});
    UniversePtr u = make_universe(3);
    SchubertEngine eng(u);
    // x_id = 2 x1 + x2 for the full flag in C^3
    WeightedSubstitution ws(cfg, WeightData({1, 2, 3}, 7, cfg), u);
    CHECK(ws.x_id == Polynomial::variable(u, u->x(1)).scaled(2) + Polynomial::variable(u, u->x(2)));
    CHECK(weighted_schubert(eng, Permutation(), 3, ws) == Polynomial::constant(u, 1));
    for (int d : {1, 2}) {
        long long wsum = 0;
        for (int j = 1; j <= d; ++j) wsum += ws.wd.weights[j - 1];
        Polynomial expected = xsum(u, d) + ws.x_id.scaled(Rational(wsum) / Rational(7));
        CHECK(weighted_schubert(eng, Permutation::simple(d), 3, ws) == expected);
    }
    // zero weights degenerate to the plain polynomials, with b renamed bw
    WeightedSubstitution zero(cfg, WeightData({0, 0, 0}, 1, cfg), u);
    std::map<int, Polynomial> rename;
    for (int l = 1; l <= 4; ++l)
        rename.emplace(u->b(l), Polynomial::variable(u, u->bw(l)));
    for (const Permutation& s : symmetric_group(3)) {
        CHECK(weighted_schubert(eng, s, 3, zero) == eng.schubert(s, 3));
        CHECK(weighted_double_schubert(eng, s, 3, zero) ==
              eng.double_schubert(s, 3).substitute(rename));
    }
}

TEST_CASE("fixed-point evaluation of the weighted alphabet") {
    FlagConfig cfg(3, {1, 2});
    UniversePtr u = make_universe(3);
    SchubertEngine eng(u);
    WeightData wd({1, 2, 3}, 7, cfg);
    CosetSystem full(cfg);
    CHECK(alpha_tau(Polynomial::constant(u, 1), Permutation::simple(1), cfg, wd) ==
          Polynomial::constant(u, 1));
    WeightedSubstitution ws(cfg, wd, u);
    for (const Permutation& tau : full.reps()) {
        long long w_tau = rep_total_weight(tau, cfg, wd);
        Polynomial bw_tau = bw_combination(tau, cfg, u);
        CHECK(alpha_tau(ws.x_id, tau, cfg, wd) == bw_tau.scaled(Rational(7) / Rational(w_tau)));
        // evaluating after the coordinate change equals substituting the
        // shifted alphabet into the double polynomial directly
        std::map<int, Polynomial> direct;
        for (int i = 1; i <= 3; ++i) {
            long long wv = wd.weights[tau(i) - 1];
            direct.emplace(u->x(i), Polynomial::variable(u, u->bw(tau(i))) -
                                        bw_tau.scaled(Rational(wv) / Rational(w_tau)));
        }
        for (int l = 1; l <= 4; ++l) {
            long long wl = l <= 3 ? wd.weights[l - 1] : 0;
            direct.emplace(u->b(l), Polynomial::variable(u, u->bw(l)) -
                                        bw_tau.scaled(Rational(wl) / Rational(w_tau)));
        }
        for (const Permutation& s : full.reps()) {
            Polynomial via_alpha = alpha_tau(weighted_double_schubert(eng, s, 3, ws), tau, cfg, wd);
            Polynomial via_direct = eng.double_schubert(s, 3).substitute(direct);
            CHECK(via_alpha == via_direct);
        }
    }
}

}  // TEST_SUITE
