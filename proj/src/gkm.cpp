#include "wschub/gkm.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wschub {

const char* to_string(Flavor f) {
    switch (f) {
        case Flavor::Straight: return "straight";
        case Flavor::Cone: return "cone";
        case Flavor::Weighted: return "weighted";
    }
    return "?";
}

std::optional<Flavor> flavor_from_string(const std::string& s) {
    if (s == "straight") return Flavor::Straight;
    if (s == "cone") return Flavor::Cone;
    if (s == "weighted") return Flavor::Weighted;
    return std::nullopt;
}

GKMContext::GKMContext(FlagConfig cfg, WeightData wd)
    : cfg_(std::move(cfg)),
      wd_(std::move(wd)),
      cosets_(cfg_),
      uni_(make_universe(cfg_.n)),
      engine_(uni_) {
    if (wd_.u < 1) throw std::invalid_argument("equivariant scalars need u >= 1");
    if (static_cast<int>(wd_.weights.size()) != cfg_.n)
        throw std::invalid_argument("weight vector length must equal n");
    int m = cosets_.size();
    y_sigma_.reserve(m);
    yw_sigma_.reserve(m);
    for (int idx = 0; idx < m; ++idx) {
        const Permutation& sigma = cosets_.rep(idx);
        Polynomial y(uni_), yw(uni_);
        for (int pos = 1; pos <= cfg_.n; ++pos) {
            int c = cfg_.chi_coeff(pos);
            if (c == 0) continue;
            y += y_var(sigma(pos)).scaled(Rational(c));
            yw += yw_var(sigma(pos)).scaled(Rational(c));
        }
        y_sigma_.push_back(std::move(y));
        yw_sigma_.push_back(std::move(yw));
        long long w = rep_total_weight(sigma, cfg_, wd_);
        assert(w > 0);
        w_sigma_.push_back(w);
        Rational h(1);
        for (const auto& [i, j] : sigma.inversions()) {
            int p = cfg_.block_of(i), q = cfg_.block_of(j);
            assert(q > p);
            h /= Rational(q - p);
        }
        h_sigma_.push_back(h);
        if (sigma.is_identity()) id_index_ = idx;
    }
    assert(id_index_ == 0);
    for (auto& t : tables_) t.assign(m, std::nullopt);
    for (auto& t : factors_) t.assign(m, std::nullopt);
}

std::shared_ptr<GKMContext> GKMContext::create(FlagConfig cfg, WeightData wd) {
    return std::shared_ptr<GKMContext>(new GKMContext(std::move(cfg), std::move(wd)));
}

Polynomial GKMContext::y_var(int i) const { return Polynomial::variable(uni_, uni_->y(i)); }

Polynomial GKMContext::yw_var(int i) const {
    return y_var(i) + Polynomial::variable(uni_, uni_->z())
                          .scaled(Rational(wd_.weights[i - 1]) / Rational(wd_.u));
}

std::vector<Polynomial> GKMContext::build_table(Flavor f, int idx) const {
    const Permutation& sigma = cosets_.rep(idx);
    int m = cosets_.size();
    std::vector<Polynomial> table;
    table.reserve(m);
    if (f == Flavor::Straight || f == Flavor::Cone) {
        // Straight and cone classes share the same representatives; the cone
        // flavor only changes how equality is read.
        std::map<int, Polynomial> b_to_y;
        for (int i = 1; i <= cfg_.n; ++i)
            b_to_y.emplace(uni_->b(i), y_var(i));
        b_to_y.emplace(uni_->b(cfg_.n + 1), Polynomial(uni_));
        for (int t = 0; t < m; ++t)
            table.push_back(
                engine_.kaji_specialize(sigma, cosets_.rep(t), cfg_.n).substitute(b_to_y));
    } else {
        WeightedSubstitution ws(cfg_, wd_, uni_);
        Polynomial wds = weighted_double_schubert(engine_, sigma, cfg_.n, ws);
        std::map<int, Polynomial> bw_to_yw;
        for (int i = 1; i <= cfg_.n; ++i)
            bw_to_yw.emplace(uni_->bw(i), yw_var(i));
        bw_to_yw.emplace(uni_->bw(cfg_.n + 1), Polynomial(uni_));
        for (int t = 0; t < m; ++t)
            table.push_back(
                alpha_tau(wds, cosets_.rep(t), cfg_, wd_).substitute(bw_to_yw));
    }
    return table;
}

std::vector<Polynomial> GKMContext::build_diag_factors(Flavor f, int idx) const {
    const Permutation& sigma = cosets_.rep(idx);
    std::vector<Polynomial> factors;
    long long w_s = w_of(idx);
    for (const auto& [i, j] : inv_P(sigma, cosets_)) {
        int a = sigma(i), b = sigma(j);  // a > b
        if (f == Flavor::Straight || f == Flavor::Cone) {
            factors.push_back(y_var(a) - y_var(b));
        } else {
            // Image of the evaluated b-difference: yw_a - yw_b minus the
            // weight-proportional multiple of yw_sigma.
            factors.push_back(yw_var(a) - yw_var(b) -
                              yw_of(idx).scaled(Rational(wd_.weights[a - 1] - wd_.weights[b - 1]) /
                                                Rational(w_s)));
        }
    }
    // The factors must multiply to the diagonal restriction exactly.
    Polynomial prod = Polynomial::constant(uni_, 1);
    for (const auto& L : factors) prod = prod * L;
    if (prod != basis_table(f, idx)[idx])
        throw std::logic_error("diagonal factorization mismatch (bug)");
    return factors;
}

const std::vector<Polynomial>& GKMContext::basis_table(Flavor f, int idx) const {
    int fi = static_cast<int>(f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (tables_[fi].at(idx)) return *tables_[fi][idx];
    }
    auto table = build_table(f, idx);
    std::lock_guard<std::mutex> lock(mu_);
    if (!tables_[fi][idx]) tables_[fi][idx] = std::move(table);
    return *tables_[fi][idx];
}

const std::vector<Polynomial>& GKMContext::diag_factors(Flavor f, int idx) const {
    int fi = static_cast<int>(f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (factors_[fi].at(idx)) return *factors_[fi][idx];
    }
    auto fac = build_diag_factors(f, idx);
    std::lock_guard<std::mutex> lock(mu_);
    if (!factors_[fi][idx]) factors_[fi][idx] = std::move(fac);
    return *factors_[fi][idx];
}

GKMClass GKMContext::basis_class(Flavor f, int idx) const {
    return GKMClass(shared_from_this(), f, basis_table(f, idx));
}

GKMClass GKMContext::basis_class(Flavor f, const Permutation& sigma) const {
    int idx = cosets_.index_of(sigma);
    if (idx < 0)
        throw std::invalid_argument("not a minimal coset representative: " + sigma.to_string());
    return basis_class(f, idx);
}

GKMClass GKMContext::class_of_one(Flavor f) const {
    std::vector<Polynomial> ones(cosets_.size(), Polynomial::constant(uni_, 1));
    return GKMClass(shared_from_this(), f, std::move(ones));
}

GKMClass GKMContext::divisor_class(Flavor f) const {
    std::vector<Polynomial> sum(cosets_.size(), Polynomial(uni_));
    for (int d : cfg_.dims) {
        int idx = cosets_.index_of(Permutation::simple(d));
        assert(idx >= 0);
        const auto& table = basis_table(f, idx);
        for (int t = 0; t < cosets_.size(); ++t) sum[t] += table[t];
    }
    return GKMClass(shared_from_this(), f, std::move(sum));
}

Polynomial GKMContext::weighted_rep_at(const Polynomial& g, int tau_idx) const {
    Rational over_w(1);
    over_w /= Rational(w_of(tau_idx));
    std::map<int, Polynomial> subst;
    for (int i = 1; i <= cfg_.n; ++i)
        subst.emplace(uni_->y(i),
                      yw_var(i) - yw_of(tau_idx).scaled(Rational(wd_.weights[i - 1]) * over_w));
    subst.emplace(uni_->z(), yw_of(tau_idx).scaled(Rational(wd_.u) * over_w));
    return g.substitute(subst);
}

std::optional<Polynomial> GKMContext::to_abstract_yw(const Polynomial& g) const {
    std::map<int, Polynomial> subst;
    for (int i = 1; i <= cfg_.n; ++i)
        subst.emplace(uni_->y(i),
                      Polynomial::variable(uni_, uni_->bw(i)) -
                          Polynomial::variable(uni_, uni_->z())
                              .scaled(Rational(wd_.weights[i - 1]) / Rational(wd_.u)));
    Polynomial h = g.substitute(subst);
    for (const auto& [m, c] : h.terms())
        if (m.exponent(uni_->z()) != 0) return std::nullopt;
    return h;
}

GKMClass::GKMClass(ContextPtr ctx, Flavor flavor, std::vector<Polynomial> restrictions)
    : ctx_(std::move(ctx)), flavor_(flavor), restr_(std::move(restrictions)) {
    if (static_cast<int>(restr_.size()) != ctx_->cosets().size())
        throw std::invalid_argument("restriction tuple has the wrong number of fixed points");
}

static void require_compatible(const GKMClass& a, const GKMClass& b) {
    if (a.context() != b.context() || a.flavor() != b.flavor())
        throw std::invalid_argument("flavor/context mismatch");
}

GKMClass GKMClass::operator+(const GKMClass& other) const {
    require_compatible(*this, other);
    std::vector<Polynomial> r = restr_;
    for (int i = 0; i < size(); ++i) r[i] += other.restr_[i];
    return GKMClass(ctx_, flavor_, std::move(r));
}

GKMClass GKMClass::operator-(const GKMClass& other) const {
    require_compatible(*this, other);
    std::vector<Polynomial> r = restr_;
    for (int i = 0; i < size(); ++i) r[i] -= other.restr_[i];
    return GKMClass(ctx_, flavor_, std::move(r));
}

GKMClass GKMClass::scaled(const Polynomial& c) const {
    std::vector<Polynomial> r = restr_;
    for (auto& p : r) p = p * c;
    return GKMClass(ctx_, flavor_, std::move(r));
}

GKMClass GKMClass::scaled(const Rational& c) const {
    std::vector<Polynomial> r = restr_;
    for (auto& p : r) p = p.scaled(c);
    return GKMClass(ctx_, flavor_, std::move(r));
}

bool GKMClass::operator==(const GKMClass& other) const {
    if (ctx_ != other.ctx_ || flavor_ != other.flavor_) return false;
    return restr_ == other.restr_;
}

VerifyReport verify_gkm(const GKMClass& c) {
    const GKMContext& ctx = *c.context();
    VerifyReport report;
    if (c.flavor() == Flavor::Weighted) {
        for (int t = 0; t < c.size(); ++t) {
            if (!ctx.to_abstract_yw(c.at(t))) {
                report.ok = false;
                report.failures.push_back(
                    {CosetSystem::Edge{t, t, 0, 0},
                     "restriction at " + ctx.cosets().rep(t).to_string() +
                         " is not in the yw subring"});
            }
        }
    }
    for (const auto& edge : ctx.cosets().reflection_edges()) {
        ++report.edges_checked;
        Polynomial diff = c.at(edge.a) - c.at(edge.b);
        bool ok = true;
        std::string detail;
        switch (c.flavor()) {
            case Flavor::Straight: {
                Polynomial value_form = ctx.y_var(edge.i) - ctx.y_var(edge.j);
                Polynomial rep_form = ctx.y_of(edge.a) - ctx.y_of(edge.b);
                bool d1 = diff.is_zero() || exact_divide_linear(diff, value_form).has_value();
                bool d2 = diff.is_zero() || exact_divide_linear(diff, rep_form).has_value();
                ok = d1 && d2;
                if (!ok)
                    detail = "difference not divisible by " +
                             (d1 ? rep_form.to_string() : value_form.to_string());
                break;
            }
            case Flavor::Cone: {
                std::vector<Polynomial> gens = {
                    ctx.y_of(edge.a) - Polynomial::variable(ctx.universe(), ctx.universe()->z()),
                    ctx.y_of(edge.b) - Polynomial::variable(ctx.universe(), ctx.universe()->z())};
                ok = reduce_mod_linear(diff, gens).is_zero();
                if (!ok) detail = "difference nonzero modulo <y_sigma - z, y_tau - z>";
                break;
            }
            case Flavor::Weighted: {
                Polynomial form = ctx.yw_of(edge.a).scaled(Rational(ctx.w_of(edge.b))) -
                                  ctx.yw_of(edge.b).scaled(Rational(ctx.w_of(edge.a)));
                ok = diff.is_zero() || exact_divide_linear(diff, form).has_value();
                if (!ok) detail = "difference not divisible by " + form.to_string();
                break;
            }
        }
        if (!ok) {
            report.ok = false;
            report.failures.push_back({edge, detail});
        }
    }
    return report;
}

GKMClass gkm_multiply(const GKMClass& a, const GKMClass& b) {
    require_compatible(a, b);
    std::vector<Polynomial> r;
    r.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) r.push_back(a.at(i) * b.at(i));
    return GKMClass(a.context(), a.flavor(), std::move(r));
}

Expansion expand_in_basis(const GKMClass& c) {
    Expansion out;
    if (c.flavor() == Flavor::Cone) {
        out.error = "cone tables are not a free module over the full base ring; "
                    "expand straight or weighted classes";
        return out;
    }
    const GKMContext& ctx = *c.context();
    int m = c.size();
    std::vector<Polynomial> residual = c.restrictions();
    for (int idx = 0; idx < m; ++idx) {  // reps are sorted by (length, word)
        if (residual[idx].is_zero()) continue;
        Polynomial q = residual[idx];
        for (const Polynomial& L : ctx.diag_factors(c.flavor(), idx)) {
            auto quotient = exact_divide_linear(q, L);
            if (!quotient) {
                out.error = "restriction at " + ctx.cosets().rep(idx).to_string() +
                            " is not divisible by the diagonal value";
                return out;
            }
            q = *quotient;
        }
        const auto& table = ctx.basis_table(c.flavor(), idx);
        for (int t = 0; t < m; ++t) residual[t] -= q * table[t];
        out.coeffs.emplace(idx, std::move(q));
    }
    for (int t = 0; t < m; ++t) {
        if (!residual[t].is_zero()) {
            out.error = "nonzero residual after elimination at " + ctx.cosets().rep(t).to_string();
            return out;
        }
    }
    out.ok = true;
    return out;
}

ChevalleyResult chevalley_check(const ContextPtr& ctx, int d, const Permutation& sigma,
                                Flavor flavor, MonkConvention convention) {
    if (flavor == Flavor::Cone)
        throw std::invalid_argument("the product formula check runs on straight or weighted tables");
    const CosetSystem& cosets = ctx->cosets();
    int sidx = cosets.index_of(sigma);
    if (sidx < 0)
        throw std::invalid_argument("not a minimal coset representative: " + sigma.to_string());
    int didx = cosets.index_of(Permutation::simple(d));
    if (didx < 0) throw std::invalid_argument("s_d is not a representative; d must be a flag dimension");

    ChevalleyResult res;
    GKMClass lhs = gkm_multiply(ctx->basis_class(flavor, didx), ctx->basis_class(flavor, sidx));

    // sum_{j<=d} (y_{sigma(j)} - y_j), the fixed multiplier before localization
    Polynomial m_poly(ctx->universe());
    for (int j = 1; j <= d; ++j) m_poly += ctx->y_var(sigma(j)) - ctx->y_var(j);

    int m = cosets.size();
    res.multiplier.reserve(m);
    for (int t = 0; t < m; ++t)
        res.multiplier.push_back(flavor == Flavor::Weighted ? ctx->weighted_rep_at(m_poly, t)
                                                            : m_poly);

    for (const Permutation& cov : monk_terms(sigma, d, cosets, convention))
        res.cover_idxs.push_back(cosets.index_of(cov));

    const auto& sigma_table = ctx->basis_table(flavor, sidx);
    std::vector<Polynomial> rhs;
    rhs.reserve(m);
    for (int t = 0; t < m; ++t) {
        Polynomial v = res.multiplier[t] * sigma_table[t];
        for (int cov : res.cover_idxs) v += ctx->basis_table(flavor, cov)[t];
        rhs.push_back(std::move(v));
    }

    res.entrywise_ok = true;
    for (int t = 0; t < m; ++t) {
        if (!(lhs.at(t) == rhs[t])) {
            res.entrywise_ok = false;
            res.detail = "entrywise mismatch at " + cosets.rep(t).to_string() + ": lhs-rhs = " +
                         (lhs.at(t) - rhs[t]).to_string();
            break;
        }
    }

    // Oracle: the expansion of LHS minus the multiplier term must be exactly
    // the unit-coefficient sum over the cover terms.
    std::vector<Polynomial> diff;
    diff.reserve(m);
    for (int t = 0; t < m; ++t) diff.push_back(lhs.at(t) - res.multiplier[t] * sigma_table[t]);
    Expansion ex = expand_in_basis(GKMClass(ctx, flavor, std::move(diff)));
    res.oracle_ok = ex.ok;
    if (ex.ok) {
        std::map<int, Polynomial> expected;
        for (int cov : res.cover_idxs)
            expected.emplace(cov, Polynomial::constant(ctx->universe(), 1));
        if (!(ex.coeffs == expected)) res.oracle_ok = false;
    }
    if (!res.oracle_ok && res.detail.empty())
        res.detail = ex.ok ? "expansion support differs from the cover set" : ex.error;
    return res;
}

MonkConvention calibrated_chevalley_convention() {
    static MonkConvention cached = [] {
        auto cfg = FlagConfig::full_flag(3);
        auto ctx = GKMContext::create(cfg, WeightData({1, 2, 3}, 7, cfg));
        auto validates = [&](MonkConvention conv) {
            for (const Permutation& sigma : ctx->cosets().reps())
                for (int d : cfg.dims) {
                    ChevalleyResult r = chevalley_check(ctx, d, sigma, Flavor::Weighted, conv);
                    if (!r.entrywise_ok || !r.oracle_ok) return false;
                }
            return true;
        };
        bool pos = validates(MonkConvention::PositionSwap);
        bool val = validates(MonkConvention::ValueSwap);
        if (pos == val) throw std::logic_error("convention calibration is inconclusive");
        return pos ? MonkConvention::PositionSwap : MonkConvention::ValueSwap;
    }();
    return cached;
}

MonkIdentity monk_identity_check(const SchubertEngine& eng, const FlagConfig& cfg,
                                 const WeightData& wd, const Permutation& sigma, int d,
                                 MonkConvention convention) {
    int n = cfg.n;
    if (sigma.size() > n) throw std::invalid_argument("sigma must be supported on {1..n}");
    if (d < 1 || d >= n) throw std::invalid_argument("need 1 <= d < n");
    WeightedSubstitution ws(cfg, wd, eng.universe());
    int m = n + 1;
    CosetSystem full(FlagConfig::full_flag(m));

    MonkIdentity out;
    out.covers = monk_terms(sigma, d, full, convention);

    Polynomial lhs = weighted_schubert(eng, Permutation::simple(d), m, ws) *
                     weighted_schubert(eng, sigma, m, ws);
    long long delta = 0;
    for (int i = 1; i <= d; ++i) delta += wd.weights[i - 1] - wd.weights[sigma(i) - 1];
    Polynomial rhs = ws.x_id.scaled(Rational(delta) / Rational(wd.u)) *
                     weighted_schubert(eng, sigma, m, ws);
    for (const Permutation& cov : out.covers) rhs += weighted_schubert(eng, cov, m, ws);

    out.residual = lhs - rhs;
    out.ok = out.residual.is_zero();
    return out;
}

DoubleExpansion expand_double_basis(const SchubertEngine& eng, const Polynomial& p,
                                    int max_ambient) {
    const UniversePtr& uni = eng.universe();
    DoubleExpansion out;
    int min_ambient = 2;
    for (const auto& [mono, c] : p.terms())
        for (const auto& [v, e] : mono.factors) {
            if (uni->is_x(v)) min_ambient = std::max(min_ambient, v - uni->x(1) + 2);
            else if (!uni->is_b(v)) {
                out.error = "polynomial is not in the x,b alphabet";
                return out;
            }
        }
    max_ambient = std::min(max_ambient, uni->n() + 2);

    for (int m = min_ambient; m <= max_ambient; ++m) {
        std::vector<Permutation> group;
        {
            CosetSystem full(FlagConfig::full_flag(m));
            group = full.reps();  // all of S_m, sorted by (length, word)
        }
        std::map<int, Polynomial> ev;  // residual evaluations per group index
        for (size_t t = 0; t < group.size(); ++t) {
            std::map<int, Polynomial> subst;
            for (int i = 1; i <= m; ++i)
                subst.emplace(uni->x(i), Polynomial::variable(uni, uni->b(group[t](i))));
            ev[static_cast<int>(t)] = p.substitute(subst);
        }
        std::map<Permutation, Polynomial> coeffs;
        bool failed = false;
        for (size_t t = 0; t < group.size() && !failed; ++t) {
            Polynomial v = ev[static_cast<int>(t)];
            if (v.is_zero()) continue;
            // Divide by the diagonal specialization, factor by factor.
            for (const auto& [i, j] : group[t].inversions()) {
                Polynomial L = Polynomial::variable(uni, uni->b(group[t](i))) -
                               Polynomial::variable(uni, uni->b(group[t](j)));
                auto q = exact_divide_linear(v, L);
                if (!q) { failed = true; break; }
                v = *q;
            }
            if (failed) break;
            for (size_t s = t + 1; s < group.size(); ++s) {
                if (ev[static_cast<int>(s)].is_zero() && v.is_zero()) continue;
                ev[static_cast<int>(s)] -= v * eng.kaji_specialize(group[t], group[s], m);
            }
            coeffs.emplace(group[t], std::move(v));
        }
        if (failed) continue;
        // Residual check against the claimed expansion.
        Polynomial check = p;
        for (const auto& [sigma, c] : coeffs)
            check -= c * eng.double_schubert(sigma, m);
        if (check.is_zero()) {
            out.ok = true;
            out.coeffs = std::move(coeffs);
            out.ambient = m;
            return out;
        }
    }
    out.error = "polynomial is outside the double basis span at the reachable ambient sizes";
    return out;
}

GKMClass theta_image(const ContextPtr& ctx, const Polynomial& p, Flavor target) {
    const UniversePtr& uni = ctx->universe();
    DoubleExpansion ex = expand_double_basis(ctx->engine(), p, uni->n() + 2);
    if (!ex.ok) throw std::invalid_argument("theta: " + ex.error);

    std::map<int, Polynomial> b_to_y;
    for (int j = 1; j <= uni->n() + 1; ++j)
        b_to_y.emplace(uni->b(j), j <= uni->n() ? Polynomial::variable(uni, uni->y(j))
                                                : Polynomial(uni));

    int m = ctx->cosets().size();
    std::vector<Polynomial> tuple(m, Polynomial(uni));
    for (const auto& [sigma, c] : ex.coeffs) {
        Permutation inv = sigma.inverse();
        int idx = ctx->cosets().index_of(inv);
        if (idx < 0) continue;  // outside the representative set: mapped to zero
        Polynomial coeff = c.substitute(b_to_y);
        const auto& table = ctx->basis_table(Flavor::Straight, idx);
        for (int t = 0; t < m; ++t) tuple[t] += coeff * table[t];
    }
    if (target == Flavor::Weighted)
        for (int t = 0; t < m; ++t) tuple[t] = ctx->weighted_rep_at(tuple[t], t);
    return GKMClass(ctx, target, std::move(tuple));
}

}  // namespace wschub
