#include "wschub/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wschub {

VarUniverse::VarUniverse(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("universe needs n >= 1");
    auto add = [this](const std::string& nm) {
        index_[nm] = static_cast<int>(names_.size());
        names_.push_back(nm);
    };
    for (int i = 1; i <= n; ++i) add("y" + std::to_string(i));
    add("z");
    for (int i = 1; i <= n + 1; ++i) add("x" + std::to_string(i));
    for (int i = 1; i <= n + 1; ++i) add("b" + std::to_string(i));
    for (int i = 1; i <= n + 1; ++i) add("bw" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add("xg" + std::to_string(i) + "_" + std::to_string(j));
    count_ = static_cast<int>(names_.size());
}

static void check_range(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) throw std::out_of_range(std::string(what) + " index out of range");
}

int VarUniverse::y(int i) const { check_range(i, 1, n_, "y"); return i - 1; }
int VarUniverse::z() const { return n_; }
int VarUniverse::x(int i) const { check_range(i, 1, n_ + 1, "x"); return n_ + 1 + (i - 1); }
int VarUniverse::b(int i) const { check_range(i, 1, n_ + 1, "b"); return n_ + 1 + (n_ + 1) + (i - 1); }
int VarUniverse::bw(int i) const { check_range(i, 1, n_ + 1, "bw"); return n_ + 1 + 2 * (n_ + 1) + (i - 1); }
int VarUniverse::xg(int i, int j) const {
    check_range(i, 1, n_, "xg");
    check_range(j, 1, n_, "xg");
    return n_ + 1 + 3 * (n_ + 1) + (i - 1) * n_ + (j - 1);
}

const std::string& VarUniverse::name(int var) const {
    if (var < 0 || var >= count_) throw std::out_of_range("variable id out of range");
    return names_[var];
}

std::optional<int> VarUniverse::find(const std::string& nm) const {
    auto it = index_.find(nm);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

UniversePtr make_universe(int n) {
    static std::mutex mu;
    static std::map<int, UniversePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<VarUniverse>(n);
    return slot;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors)
        if (v == var) return e;
    return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first < b.factors[j].first) r.factors.push_back(a.factors[i++]);
        else if (a.factors[i].first > b.factors[j].first) r.factors.push_back(b.factors[j++]);
        else {
            r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i; ++j;
        }
    }
    for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
    return r;
}

int cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            return a.factors[i].first < b.factors[j].first ? 1 : -1;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i; ++j;
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

Polynomial Polynomial::constant(UniversePtr uni, const Rational& c) {
    Polynomial f(std::move(uni));
    if (c != 0) f.terms_.emplace(Monomial{}, c);
    return f;
}

Polynomial Polynomial::variable(UniversePtr uni, int var, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Polynomial f(std::move(uni));
    if (var < 0 || var >= f.uni_->var_count()) throw std::out_of_range("variable id out of range");
    Monomial m;
    if (exp > 0) m.factors.emplace_back(var, exp);
    f.terms_.emplace(m, Rational(1));
    return f;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0) d = m.degree();
        else if (m.degree() != d) return false;
    }
    if (deg) *deg = d;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(uni_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void require_same_universe(const Polynomial& f, const Polynomial& g) {
    if (!same_universe(f.universe(), g.universe()))
        throw std::invalid_argument("polynomial universe mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_universe(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    require_same_universe(*this, g);
    Polynomial r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_universe(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_universe(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_universe(*this, g);
    Polynomial r(uni_ ? uni_ : g.universe());
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(monomial_mul(m1, m2), c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(uni_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(uni_, 1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    auto it = terms_.begin(), jt = g.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
    for (const auto& [v, g] : assignment)
        if (!same_universe(uni_, g.universe()))
            throw std::invalid_argument("substitution universe mismatch");
    // Power cache keyed per assigned variable.
    std::map<int, std::vector<Polynomial>> powers;
    auto power_of = [&](int var, int e) -> const Polynomial& {
        auto& vec = powers[var];
        if (vec.empty()) vec.push_back(Polynomial::constant(uni_, 1));
        while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * assignment.at(var));
        return vec[e];
    };
    Polynomial result(uni_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(uni_, c);
        Monomial untouched;
        for (const auto& [v, e] : m.factors) {
            if (assignment.count(v)) term = term * power_of(v, e);
            else untouched.factors.emplace_back(v, e);
        }
        if (!untouched.factors.empty()) {
            Polynomial mono(uni_);
            mono.add_term(untouched, Rational(1));
            term = term * mono;
        }
        result += term;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            if (a < 0) { os << " - "; a = -a; }
            else os << " + ";
        }
        first = false;
        bool wrote_coeff = false;
        if (m.factors.empty() || a != 1) {
            os << rational_to_string(a);
            wrote_coeff = true;
        }
        bool leading = !wrote_coeff;
        for (const auto& [v, e] : m.factors) {
            if (!leading) os << "*";
            leading = false;
            os << uni_->name(v);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const UniversePtr& uni;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool peek(char c) { skip_ws(); return pos < s.size() && s[pos] == c; }
    bool eat(char c) { if (peek(c)) { ++pos; return true; } return false; }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }

    Rational number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        std::string num = s.substr(start, pos - start);
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        return rational_from_string(num);
    }

    // One factor: a number or var[^exp].
    void factor(Rational& coeff, Monomial& mono) {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff *= number();
            return;
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected variable or number");
        std::string nm = s.substr(start, pos - start);
        auto var = uni->find(nm);
        if (!var) fail("unknown variable '" + nm + "'");
        int e = 1;
        if (eat('^')) {
            skip_ws();
            size_t estart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == estart) fail("expected exponent");
            e = std::stoi(s.substr(estart, pos - estart));
        }
        Monomial one;
        one.factors.emplace_back(*var, e);
        mono = monomial_mul(mono, one);
    }

    Polynomial parse() {
        Polynomial result(uni);
        skip_ws();
        if (pos >= s.size()) fail("empty input");
        bool expect_term = true;
        int sign = 1;
        while (true) {
            skip_ws();
            if (pos >= s.size()) {
                if (expect_term) fail("dangling sign");
                break;
            }
            if (!expect_term) {
                if (eat('+')) sign = 1;
                else if (eat('-')) sign = -1;
                else fail("expected '+' or '-'");
                expect_term = true;
                continue;
            }
            while (eat('+')) {}
            while (eat('-')) sign = -sign;
            Rational coeff(1);
            Monomial mono;
            factor(coeff, mono);
            while (eat('*')) factor(coeff, mono);
            result.add_term(mono, sign < 0 ? -coeff : coeff);
            sign = 1;
            expect_term = false;
        }
        return result;
    }
};

}  // namespace

Polynomial Polynomial::parse(const UniversePtr& uni, const std::string& text) {
    Parser p{uni, text};
    return p.parse();
}

bool is_linear_form(const Polynomial& f) {
    if (f.is_zero()) return false;
    for (const auto& [m, c] : f.terms())
        if (m.degree() != 1) return false;
    return true;
}

std::optional<Polynomial> exact_divide_linear(const Polynomial& f, const Polynomial& L) {
    require_same_universe(f, L);
    if (!is_linear_form(L)) throw std::invalid_argument("divisor must be a linear form");
    const auto& uni = f.universe() ? f.universe() : L.universe();
    if (f.is_zero()) return Polynomial(uni);

    // Pivot on the smallest variable of L; rest R is pivot-free.
    int pivot = -1;
    Rational c;
    for (const auto& [m, k] : L.terms()) {
        int v = m.factors[0].first;
        if (pivot < 0 || v < pivot) { pivot = v; c = k; }
    }
    Polynomial R = L - Polynomial::variable(uni, pivot).scaled(c);

    // Decompose f by the pivot exponent.
    std::map<int, Polynomial> parts;
    for (const auto& [m, k] : f.terms()) {
        int e = m.exponent(pivot);
        Monomial rest;
        for (const auto& [v, ex] : m.factors)
            if (v != pivot) rest.factors.emplace_back(v, ex);
        auto it = parts.find(e);
        if (it == parts.end()) it = parts.emplace(e, Polynomial(uni)).first;
        it->second.add_term(rest, k);
    }
    int D = parts.rbegin()->first;
    if (D == 0) return std::nullopt;  // nonzero, pivot-free

    auto part = [&](int k) { auto it = parts.find(k); return it == parts.end() ? Polynomial(uni) : it->second; };
    std::vector<Polynomial> q(D, Polynomial(uni));
    Rational cinv = Rational(1) / c;
    q[D - 1] = part(D).scaled(cinv);
    for (int k = D - 1; k >= 1; --k) q[k - 1] = (part(k) - R * q[k]).scaled(cinv);
    Polynomial rem = part(0) - R * q[0];
    if (!rem.is_zero()) return std::nullopt;

    Polynomial quotient(uni);
    for (int k = 0; k < D; ++k)
        quotient += q[k] * Polynomial::variable(uni, pivot, k);
    return quotient;
}

Polynomial reduce_mod_linear(const Polynomial& f, const std::vector<Polynomial>& generators) {
    const UniversePtr& uni = f.universe();
    std::vector<std::pair<int, Polynomial>> rules;  // pivot -> replacement
    for (const Polynomial& g0 : generators) {
        if (!is_linear_form(g0)) throw std::invalid_argument("generators must be nonzero linear forms");
        Polynomial g = g0;
        for (const auto& [v, rhs] : rules) g = g.substitute({{v, rhs}});
        if (g.is_zero()) throw std::invalid_argument("linearly dependent generator set");
        int pivot = -1;
        Rational c;
        for (const auto& [m, k] : g.terms()) {
            int v = m.factors[0].first;
            if (pivot < 0 || v < pivot) { pivot = v; c = k; }
        }
        Polynomial rhs = (Polynomial::variable(uni, pivot).scaled(c) - g).scaled(Rational(1) / c);
        rules.emplace_back(pivot, rhs);
    }
    // Back substitution: make every replacement pivot-free.
    for (int i = static_cast<int>(rules.size()) - 2; i >= 0; --i)
        for (size_t j = i + 1; j < rules.size(); ++j)
            rules[i].second = rules[i].second.substitute({{rules[j].first, rules[j].second}});
    std::map<int, Polynomial> subst;
    for (auto& [v, rhs] : rules) subst.emplace(v, std::move(rhs));
    return f.substitute(subst);
}

Polynomial divided_difference(const Polynomial& f, int i) {
    const UniversePtr& uni = f.universe();
    if (!uni) throw std::invalid_argument("divided difference of an unattached polynomial");
    if (i < 1 || i > uni->n()) throw std::out_of_range("divided difference index");
    int xi = uni->x(i), xj = uni->x(i + 1);
    Polynomial swapped = f.substitute({{xi, Polynomial::variable(uni, xj)},
                                       {xj, Polynomial::variable(uni, xi)}});
    Polynomial numer = f - swapped;
    Polynomial L = Polynomial::variable(uni, xi) - Polynomial::variable(uni, xj);
    if (numer.is_zero()) return Polynomial(uni);
    auto q = exact_divide_linear(numer, L);
    if (!q) throw std::logic_error("divided difference: antisymmetrization not divisible (bug)");
    return *q;
}

}  // namespace wschub
