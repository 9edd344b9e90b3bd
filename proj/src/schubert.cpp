#include "wschub/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wschub {

namespace {

void check_ambient(const UniversePtr& uni, const Permutation& sigma, int m) {
    if (m < 1) throw std::invalid_argument("ambient size must be >= 1");
    if (sigma.size() > m) throw std::invalid_argument("permutation does not fit in S_m");
    if (m > uni->n() + 2) throw std::invalid_argument("ambient size exceeds the variable universe");
}

std::vector<Permutation> symmetric_group(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> all;
    do {
        all.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return all;
}

}  // namespace

Polynomial SchubertEngine::schubert_uncached(const Permutation& sigma, int m) const {
    if (sigma.length() == m * (m - 1) / 2) {  // longest element
        Polynomial p = Polynomial::constant(uni_, 1);
        for (int i = 1; i <= m - 1; ++i) p = p * Polynomial::variable(uni_, uni_->x(i), m - i);
        return p;
    }
    int i = 1;
    while (sigma(i) > sigma(i + 1)) ++i;  // smallest right ascent
    return divided_difference(schubert(sigma * Permutation::simple(i), m), i);
}

Polynomial SchubertEngine::schubert(const Permutation& sigma, int m) const {
    check_ambient(uni_, sigma, m);
    auto key = std::make_pair(sigma.canonical_word(), m);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = singles_.find(key);
        if (it != singles_.end()) return it->second;
    }
    Polynomial p = schubert_uncached(sigma, m);
    std::lock_guard<std::mutex> lock(mu_);
    return singles_.emplace(key, std::move(p)).first->second;
}

Polynomial SchubertEngine::double_dd_uncached(const Permutation& sigma, int m) const {
    if (sigma.length() == m * (m - 1) / 2) {
        Polynomial p = Polynomial::constant(uni_, 1);
        for (int i = 1; i <= m - 1; ++i)
            for (int j = 1; i + j <= m; ++j)
                p = p * (Polynomial::variable(uni_, uni_->x(i)) - Polynomial::variable(uni_, uni_->b(j)));
        return p;
    }
    int i = 1;
    while (sigma(i) > sigma(i + 1)) ++i;
    return divided_difference(
        double_schubert(sigma * Permutation::simple(i), m, DoubleRoute::DividedDifference), i);
}

Polynomial SchubertEngine::double_schubert(const Permutation& sigma, int m, DoubleRoute route) const {
    check_ambient(uni_, sigma, m);
    auto key = std::make_pair(sigma.canonical_word(), m);
    auto& cache = route == DoubleRoute::DividedDifference ? doubles_dd_ : doubles_sum_;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Polynomial p(uni_);
    if (route == DoubleRoute::DividedDifference) {
        p = double_dd_uncached(sigma, m);
    } else {
        // Length-additive factorizations sigma = mu^{-1} tau, i.e. tau = mu *
        // sigma: the x factor is tau, the -b factor mu. This orientation is
        // the one compatible with setting b = 0 and with the fixed-point
        // specialization formulas; the transposed reading produces the
        // polynomial of sigma^{-1} instead.
        for (const Permutation& mu : symmetric_group(m)) {
            Permutation tau = mu * sigma;
            if (mu.length() + tau.length() != sigma.length()) continue;
            p += schubert(tau, m) * schubert_neg_b(mu, m);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cache.emplace(key, std::move(p)).first->second;
}

Polynomial SchubertEngine::schubert_neg_b(const Permutation& sigma, int m) const {
    Polynomial s = schubert(sigma, m);
    std::map<int, Polynomial> subst;
    for (int i = 1; i <= m; ++i)
        subst.emplace(uni_->x(i), -Polynomial::variable(uni_, uni_->b(i)));
    return s.substitute(subst);
}

Polynomial SchubertEngine::kaji_specialize(const Permutation& sigma, const Permutation& tau,
                                           int m) const {
    check_ambient(uni_, tau, m);
    Polynomial d = double_schubert(sigma, m);
    std::map<int, Polynomial> subst;
    for (int i = 1; i <= m; ++i)
        subst.emplace(uni_->x(i), Polynomial::variable(uni_, uni_->b(tau(i))));
    return d.substitute(subst);
}

WeightedSubstitution::WeightedSubstitution(FlagConfig cfg_, WeightData wd_, UniversePtr uni_)
    : cfg(std::move(cfg_)), wd(std::move(wd_)), uni(std::move(uni_)), x_id(uni) {
    if (wd.u < 1) throw std::invalid_argument("the weighted coordinate change needs u >= 1");
    if (static_cast<int>(wd.weights.size()) != cfg.n)
        throw std::invalid_argument("weight vector length must equal n");
    for (int pos = 1; pos <= cfg.n; ++pos) {
        int c = cfg.chi_coeff(pos);
        if (c > 0) x_id += Polynomial::variable(uni, uni->x(pos)).scaled(Rational(c));
    }
}

std::map<int, Polynomial> WeightedSubstitution::forward() const {
    std::map<int, Polynomial> m;
    for (int l = 1; l <= cfg.n + 1; ++l) {
        long long w = l <= cfg.n ? wd.weights[l - 1] : 0;
        m.emplace(uni->b(l), Polynomial::variable(uni, uni->bw(l)) -
                                 x_id.scaled(Rational(w) / Rational(wd.u)));
    }
    return m;
}

std::map<int, Polynomial> WeightedSubstitution::inverse() const {
    std::map<int, Polynomial> m;
    for (int l = 1; l <= cfg.n + 1; ++l) {
        long long w = l <= cfg.n ? wd.weights[l - 1] : 0;
        m.emplace(uni->bw(l), Polynomial::variable(uni, uni->b(l)) +
                                  x_id.scaled(Rational(w) / Rational(wd.u)));
    }
    return m;
}

Polynomial weighted_double_schubert(const SchubertEngine& eng, const Permutation& sigma, int m,
                                    const WeightedSubstitution& ws) {
    return eng.double_schubert(sigma, m).substitute(ws.forward());
}

Polynomial weighted_schubert(const SchubertEngine& eng, const Permutation& sigma, int m,
                             const WeightedSubstitution& ws) {
    const UniversePtr& uni = eng.universe();
    std::map<int, Polynomial> subst;
    for (int l = 1; l <= ws.cfg.n + 1; ++l) {
        long long w = l <= ws.cfg.n ? ws.wd.weights[l - 1] : 0;
        subst.emplace(uni->b(l), ws.x_id.scaled(-Rational(w) / Rational(ws.wd.u)));
    }
    return eng.double_schubert(sigma, m).substitute(subst);
}

long long rep_total_weight(const Permutation& sigma, const FlagConfig& cfg, const WeightData& wd) {
    long long total = wd.u;
    for (int pos = 1; pos <= cfg.n; ++pos)
        total += static_cast<long long>(cfg.chi_coeff(pos)) * wd.weights[sigma(pos) - 1];
    return total;
}

Polynomial bw_combination(const Permutation& sigma, const FlagConfig& cfg, const UniversePtr& uni) {
    Polynomial p(uni);
    for (int pos = 1; pos <= cfg.n; ++pos) {
        int c = cfg.chi_coeff(pos);
        if (c > 0) p += Polynomial::variable(uni, uni->bw(sigma(pos))).scaled(Rational(c));
    }
    return p;
}

Polynomial alpha_tau(const Polynomial& f, const Permutation& tau, const FlagConfig& cfg,
                     const WeightData& wd) {
    const UniversePtr& uni = f.universe();
    if (wd.u < 1) throw std::invalid_argument("alpha_tau needs u >= 1");
    long long w_tau = rep_total_weight(tau, cfg, wd);
    Polynomial bw_tau = bw_combination(tau, cfg, uni);
    std::map<int, Polynomial> subst;
    for (int i = 1; i <= cfg.n; ++i) {
        long long wi = wd.weights[tau(i) - 1];
        subst.emplace(uni->x(i), Polynomial::variable(uni, uni->bw(tau(i))) -
                                     bw_tau.scaled(Rational(wi) / Rational(w_tau)));
    }
    // The x_id form must land on (u/w_tau) bw_tau.
    Polynomial x_id(uni);
    for (int pos = 1; pos <= cfg.n; ++pos) {
        int c = cfg.chi_coeff(pos);
        if (c > 0) x_id += Polynomial::variable(uni, uni->x(pos)).scaled(Rational(c));
    }
    if (x_id.substitute(subst) != bw_tau.scaled(Rational(wd.u) / Rational(w_tau)))
        throw std::logic_error("alpha_tau: image of the x_id form is off (bug)");
    return f.substitute(subst);
}

}  // namespace wschub
