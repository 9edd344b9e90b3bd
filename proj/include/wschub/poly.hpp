#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wschub/rational.hpp"

namespace wschub {

// The fixed variable universe for ambient dimension n. All polynomials of a
// computation share one universe; the total variable order is
//   y1 < ... < yn < z < x1 < ... < x_{n+1} < b1 < ... < b_{n+1}
//     < bw1 < ... < bw_{n+1} < xg(1,1) < ... < xg(n,n)   (row major).
// The x/b/bw families carry one index of headroom beyond n so that identities
// can be checked in the S_{n+1} embedding.
class VarUniverse {
public:
    explicit VarUniverse(int n);

    int n() const { return n_; }
    int var_count() const { return count_; }

    int y(int i) const;        // 1 <= i <= n
    int z() const;
    int x(int i) const;        // 1 <= i <= n+1
    int b(int i) const;        // 1 <= i <= n+1
    int bw(int i) const;       // 1 <= i <= n+1
    int xg(int i, int j) const;  // 1 <= i,j <= n

    bool is_x(int var) const { return var >= x(1) && var <= x(n_ + 1); }
    bool is_b(int var) const { return var >= b(1) && var <= b(n_ + 1); }
    bool is_bw(int var) const { return var >= bw(1) && var <= bw(n_ + 1); }
    bool is_y(int var) const { return var >= 0 && var < n_; }

    const std::string& name(int var) const;
    std::optional<int> find(const std::string& name) const;

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;
UniversePtr make_universe(int n);

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a && b && (a == b || a->n() == b->n());
}

// Sparse exponent vector; factors sorted by variable id, exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    int degree() const;
    int exponent(int var) const;
    bool operator==(const Monomial& other) const { return factors == other.factors; }
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
// -1 / 0 / 1 in graded lexicographic order (earlier variable, larger power wins).
int cmp_grlex(const Monomial& a, const Monomial& b);

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_grlex(a, b) > 0; }
};

// Exact sparse multivariate polynomial over Q. Immutable in spirit: all
// operations return fresh values, zero coefficients are never stored, and the
// term map iterates in the canonical (descending grlex) order used for
// serialization.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    Polynomial() = default;
    explicit Polynomial(UniversePtr uni) : uni_(std::move(uni)) {}

    static Polynomial constant(UniversePtr uni, const Rational& c);
    static Polynomial variable(UniversePtr uni, int var, int exp = 1);

    const UniversePtr& universe() const { return uni_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(int* deg = nullptr) const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int e) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // Simultaneous substitution; unassigned variables are left alone.
    Polynomial substitute(const std::map<int, Polynomial>& assignment) const;

    std::string to_string() const;
    static Polynomial parse(const UniversePtr& uni, const std::string& text);

    void add_term(const Monomial& m, const Rational& c);  // canonicalizing

private:
    UniversePtr uni_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

// True for a nonzero homogeneous degree-1 polynomial with no constant term.
bool is_linear_form(const Polynomial& f);

// Exact division of f by a linear form L; nullopt when the remainder is
// nonzero. Synthetic division in the smallest variable of L.
std::optional<Polynomial> exact_divide_linear(const Polynomial& f, const Polynomial& L);

// Canonical normal form of f modulo the ideal generated by independent linear
// forms: the forms are triangularized (pivot = smallest variable) and pivots
// eliminated by substitution. Throws std::invalid_argument on a linearly
// dependent generator set. f lies in the ideal iff the result is zero.
Polynomial reduce_mod_linear(const Polynomial& f, const std::vector<Polynomial>& generators);

// (f - s_i f)/(x_i - x_{i+1}) where s_i swaps x_i and x_{i+1}. The numerator
// is antisymmetric in x_i, x_{i+1}, so the division is exact; a nonzero
// remainder indicates an implementation bug and throws std::logic_error.
Polynomial divided_difference(const Polynomial& f, int i);

}  // namespace wschub
