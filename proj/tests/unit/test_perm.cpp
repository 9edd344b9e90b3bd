#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wschub/perm.hpp"

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

// Reflexive-transitive closure of the cover relation, the order oracle.
std::map<Permutation, std::set<Permutation>> cover_closure(int n) {
    auto group = symmetric_group(n);
    std::map<Permutation, std::vector<Permutation>> up;
    for (const Permutation& s : group) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                std::vector<int> w = s.word(n);
                std::swap(w[i - 1], w[j - 1]);
                Permutation t(std::move(w));
                if (t.length() == s.length() + 1) up[s].push_back(t);
            }
        }
    }
    std::map<Permutation, std::set<Permutation>> reach;
    for (const Permutation& s : group) {
        std::set<Permutation>& seen = reach[s];
        std::vector<Permutation> queue = {s};
        seen.insert(s);
        while (!queue.empty()) {
            Permutation cur = queue.back();
            queue.pop_back();
            for (const Permutation& nxt : up[cur])
                if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return reach;
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("construction, parsing and canonical form") {
    CHECK(Permutation({1, 2, 3}).is_identity());
    CHECK(Permutation({2, 1, 3}) == Permutation({2, 1}));
    CHECK(Permutation::parse("1,4,2,3") == Permutation({1, 4, 2, 3}));
    CHECK(Permutation::parse("s2*s1") == Permutation({3, 1, 2}));
    CHECK(Permutation::parse("id").is_identity());
    CHECK(Permutation({3, 1, 2}).to_string() == "3,1,2");
    CHECK(Permutation().to_string() == "id");
    CHECK(Permutation().to_string(3) == "1,2,3");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("s0"), std::invalid_argument);
}

TEST_CASE("group operations") {
    Permutation s1 = Permutation::simple(1), s2 = Permutation::simple(2);
    CHECK(s2 * s1 == Permutation({3, 1, 2}));
    CHECK((s2 * s1).inverse() == Permutation({2, 3, 1}));
    CHECK(s1 * s1 == Permutation());
    CHECK(Permutation::transposition(1, 3) == Permutation({3, 2, 1}));
    Permutation p({1, 4, 2, 3});
    CHECK(p(2) == 4);
    CHECK(p(7) == 7);
}

TEST_CASE("length and inversions") {
    CHECK(Permutation().length() == 0);
    CHECK(Permutation().inversions().empty());
    for (int n : {2, 3, 4, 5}) {
        std::vector<int> rev(n);
        for (int i = 0; i < n; ++i) rev[i] = n - i;
        CHECK(Permutation(rev).length() == n * (n - 1) / 2);
    }
    Permutation p({1, 4, 2, 3});
    CHECK(p.length() == 2);
    CHECK(p.inversions() == std::vector<std::pair<int, int>>({{2, 3}, {2, 4}}));
}

TEST_CASE("inversion count matches the descent-walk oracle") {
    for (const Permutation& s : symmetric_group(4)) {
        std::vector<int> word = lex_min_reduced_word(s);
        CHECK(static_cast<int>(word.size()) == s.length());
        Permutation rebuilt;
        for (int i : word) rebuilt = rebuilt * Permutation::simple(i);
        CHECK(rebuilt == s);
    }
}

TEST_CASE("minimal coset representatives") {
    CHECK(CosetSystem(FlagConfig(4, {1, 3})).size() == 12);
    CHECK(CosetSystem(FlagConfig(3, {1, 2})).size() == 6);  // the whole of S_3
    CHECK(CosetSystem(FlagConfig(4, {2})).size() == 6);     // C(4,2)
    for (const FlagConfig& cfg :
         {FlagConfig(4, {1, 3}), FlagConfig(4, {2}), FlagConfig(5, {2, 4})}) {
        CosetSystem system(cfg);
        long long expected = 1;
        for (int k = 2; k <= cfg.n; ++k) expected *= k;
        int prev = 0;
        std::vector<int> blocks = cfg.dims;
        blocks.push_back(cfg.n);
        for (int d : blocks) {
            for (int k = 2; k <= d - prev; ++k) expected /= k;
            prev = d;
        }
        CHECK(system.size() == expected);
        // exactly one minimum and one maximum
        CHECK(system.rep(0).is_identity());
        CHECK(system.rep(system.size() - 1).length() == system.dimension());
        for (int i = 0; i + 1 < system.size(); ++i)
            CHECK(system.rep(i).length() <= system.rep(i + 1).length());
    }
    CHECK_THROWS_AS(FlagConfig(4, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FlagConfig(4, {4}), std::invalid_argument);
}

TEST_CASE("projection to representatives") {
    CosetSystem gr24(FlagConfig(4, {2}));
    CHECK(gr24.project(Permutation({1, 4, 3, 2})) == Permutation({1, 4, 2, 3}));
    CHECK(gr24.project(Permutation({4, 3, 2, 1})) == Permutation({3, 4, 1, 2}));
    for (const Permutation& s : symmetric_group(4))
        CHECK(gr24.contains(gr24.project(s)));
}

TEST_CASE("parabolic inversions") {
    CosetSystem p2(FlagConfig(2, {1}));
    CHECK(inv_P(Permutation(), p2).empty());
    CHECK(inv_P(Permutation::simple(1), p2) == std::vector<std::pair<int, int>>({{1, 2}}));
    CosetSystem p413(FlagConfig(4, {1, 3}));
    CHECK(inv_P(Permutation({3, 1, 2, 4}), p413) ==
          std::vector<std::pair<int, int>>({{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(inv_P(Permutation({1, 3, 2}), p413), std::invalid_argument);
}

TEST_CASE("bruhat order examples and oracle") {
    Permutation s1 = Permutation::simple(1), s2 = Permutation::simple(2);
    for (const Permutation& t : symmetric_group(3)) {
        CHECK(bruhat_leq(Permutation(), t));
        CHECK(bruhat_leq(t, t));
    }
    CHECK(!bruhat_leq(s1, s2));
    CHECK(!bruhat_leq(s2, s1));
    for (int n : {3, 4, 5}) {
        auto reach = cover_closure(n);
        for (const Permutation& a : symmetric_group(n))
            for (const Permutation& b : symmetric_group(n))
                CHECK(bruhat_leq(a, b) == (reach[a].count(b) > 0));
    }
}

TEST_CASE("reflection edges") {
    CosetSystem p2(FlagConfig(2, {1}));
    auto e2 = p2.reflection_edges();
    REQUIRE(e2.size() == 1);
    CHECK(p2.rep(e2[0].a).is_identity());
    CHECK(p2.rep(e2[0].b) == Permutation::simple(1));
    CHECK(e2[0].i == 1);
    CHECK(e2[0].j == 2);

    CosetSystem p3(FlagConfig(3, {1, 2}));
    CHECK(p3.reflection_edges().size() == 9);  // 6 covers + 3 longer reflections
    bool top_edge = false;
    for (const auto& e : p3.reflection_edges())
        if (p3.rep(e.a).is_identity() && p3.rep(e.b) == Permutation({3, 2, 1})) top_edge = true;
    CHECK(top_edge);

    // every Bruhat cover pair appears among the edges
    for (const FlagConfig& cfg : {FlagConfig(3, {1, 2}), FlagConfig(4, {1, 3}), FlagConfig(4, {2})}) {
        CosetSystem system(cfg);
        std::set<std::pair<int, int>> pairs;
        for (const auto& e : system.reflection_edges()) pairs.emplace(e.a, e.b);
        for (int a = 0; a < system.size(); ++a)
            for (int b = 0; b < system.size(); ++b)
                if (system.rep(b).length() == system.rep(a).length() + 1 &&
                    bruhat_leq(system.rep(a), system.rep(b)))
                    CHECK(pairs.count({a, b}) == 1);
    }

    // on full flags the endpoint lengths differ by an odd amount
    for (const auto& e : p3.reflection_edges())
        CHECK((p3.rep(e.b).length() - p3.rep(e.a).length()) % 2 == 1);
    // on a proper parabolic quotient the projected pair can differ by an even
    // amount; the Grassmannian of planes in C^4 realizes difference 2
    CosetSystem gr24(FlagConfig(4, {2}));
    bool even_seen = false;
    for (const auto& e : gr24.reflection_edges())
        if ((gr24.rep(e.b).length() - gr24.rep(e.a).length()) % 2 == 0) even_seen = true;
    CHECK(even_seen);
}

TEST_CASE("monk candidate terms") {
    CosetSystem p3(FlagConfig(3, {1, 2}));
    for (int d : {1, 2})
        for (MonkConvention conv : {MonkConvention::PositionSwap, MonkConvention::ValueSwap}) {
            auto terms = monk_terms(Permutation(), d, p3, conv);
            REQUIRE(terms.size() == 1);
            CHECK(terms[0] == Permutation::simple(d));
        }
    auto pos = monk_terms(Permutation::simple(1), 1, p3, MonkConvention::PositionSwap);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0] == Permutation({3, 1, 2}));
    auto val = monk_terms(Permutation::simple(1), 1, p3, MonkConvention::ValueSwap);
    REQUIRE(val.size() == 1);
    CHECK(val[0] == Permutation({2, 3, 1}));

    CosetSystem p413(FlagConfig(4, {1, 3}));
    for (const Permutation& s : p413.reps())
        for (int d : {1, 3})
            for (const Permutation& t : monk_terms(s, d, p413, MonkConvention::PositionSwap)) {
                CHECK(t.length() == s.length() + 1);
                CHECK(p413.contains(t));
            }
    CHECK_THROWS_AS(monk_terms(Permutation(), 2, p413, MonkConvention::PositionSwap),
                    std::invalid_argument);
}

TEST_CASE("poincare counts") {
    CosetSystem p413(FlagConfig(4, {1, 3}));
    CHECK(p413.dimension() == 5);
    CHECK(p413.poincare() == std::vector<long long>({1, 2, 3, 3, 2, 1}));
    CosetSystem p2(FlagConfig(2, {1}));
    CHECK(p2.dimension() == 1);
    CHECK(p2.poincare() == std::vector<long long>({1, 1}));
    CosetSystem p3(FlagConfig(3, {1, 2}));
    CHECK(p3.poincare() == std::vector<long long>({1, 2, 2, 1}));
    for (const FlagConfig& cfg : {FlagConfig(4, {2}), FlagConfig(5, {1, 4}), FlagConfig(5, {2, 3})}) {
        CosetSystem system(cfg);
        auto counts = system.poincare();
        long long total = 0;
        for (size_t k = 0; k < counts.size(); ++k) {
            total += counts[k];
            CHECK(counts[k] == counts[counts.size() - 1 - k]);
        }
        CHECK(total == system.size());
        CHECK(counts[system.dimension()] == 1);
    }
}

}  // TEST_SUITE
