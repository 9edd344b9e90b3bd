#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wschub/perm.hpp"
#include "wschub/poly.hpp"
#include "wschub/schubert.hpp"
#include "wschub/tableau.hpp"

namespace wschub {

// The three fixed-point presentations. Straight restrictions live in Q[y],
// cone restrictions in Q[y,z] read modulo <y_tau - z> at each fixed point,
// and weighted restrictions in the subring generated by yw_i = y_i + (w_i/u) z.
enum class Flavor { Straight, Cone, Weighted };

const char* to_string(Flavor f);
std::optional<Flavor> flavor_from_string(const std::string& s);

class GKMClass;

// Everything attached to one (flag config, weight data) pair: the coset
// system, the equivariant scalars y_sigma, yw_sigma, w_sigma, h_sigma, and
// lazily built basis restriction tables per flavor. Requires u >= 1.
class GKMContext : public std::enable_shared_from_this<GKMContext> {
public:
    static std::shared_ptr<GKMContext> create(FlagConfig cfg, WeightData wd);

    const FlagConfig& config() const { return cfg_; }
    const WeightData& weight_data() const { return wd_; }
    const CosetSystem& cosets() const { return cosets_; }
    const UniversePtr& universe() const { return uni_; }
    const SchubertEngine& engine() const { return engine_; }

    const Polynomial& y_of(int idx) const { return y_sigma_.at(idx); }
    const Polynomial& yw_of(int idx) const { return yw_sigma_.at(idx); }
    long long w_of(int idx) const { return w_sigma_.at(idx); }
    const Rational& h_of(int idx) const { return h_sigma_.at(idx); }
    const Polynomial& y_id() const { return y_sigma_.at(id_index_); }
    int id_index() const { return id_index_; }
    Polynomial y_var(int i) const;   // y_i
    Polynomial yw_var(int i) const;  // y_i + (w_i/u) z

    // Restriction tuples of the basis classes, indexed over the reps.
    const std::vector<Polynomial>& basis_table(Flavor f, int idx) const;
    // The linear factors whose product is basis_table(f, idx)[idx] exactly
    // (asserted); the handle expand_in_basis divides by, factor by factor.
    const std::vector<Polynomial>& diag_factors(Flavor f, int idx) const;

    GKMClass basis_class(Flavor f, int idx) const;
    GKMClass basis_class(Flavor f, const Permutation& sigma) const;
    GKMClass class_of_one(Flavor f) const;
    // Sum of the simple classes xi_{s_{d_i}}; restricts to y_tau - y_id in the
    // straight flavor and to z - y_id modulo <y_tau - z> in the cone flavor.
    GKMClass divisor_class(Flavor f) const;

    // The unique subring representative congruent to g modulo <y_tau - z>:
    // y_i -> yw_i - (w_i/w_tau) yw_tau and z -> (u/w_tau) yw_tau. Fixes the
    // subring pointwise and kills y_tau - z.
    Polynomial weighted_rep_at(const Polynomial& g, int tau_idx) const;

    // Rewrite toward abstract yw coordinates (the bw slots stand in for them);
    // nullopt when g is not in the subring.
    std::optional<Polynomial> to_abstract_yw(const Polynomial& g) const;

private:
    GKMContext(FlagConfig cfg, WeightData wd);

    FlagConfig cfg_;
    WeightData wd_;
    CosetSystem cosets_;
    UniversePtr uni_;
    SchubertEngine engine_;
    int id_index_ = -1;
    std::vector<Polynomial> y_sigma_, yw_sigma_;
    std::vector<long long> w_sigma_;
    std::vector<Rational> h_sigma_;

    mutable std::mutex mu_;
    mutable std::vector<std::optional<std::vector<Polynomial>>> tables_[3];
    mutable std::vector<std::optional<std::vector<Polynomial>>> factors_[3];

    std::vector<Polynomial> build_table(Flavor f, int idx) const;
    std::vector<Polynomial> build_diag_factors(Flavor f, int idx) const;
};

using ContextPtr = std::shared_ptr<const GKMContext>;

// A tuple of fixed-point restrictions tagged with its flavor. Values are
// immutable; products and sums return fresh classes.
class GKMClass {
public:
    GKMClass(ContextPtr ctx, Flavor flavor, std::vector<Polynomial> restrictions);

    const ContextPtr& context() const { return ctx_; }
    Flavor flavor() const { return flavor_; }
    const std::vector<Polynomial>& restrictions() const { return restr_; }
    const Polynomial& at(int idx) const { return restr_.at(idx); }
    int size() const { return static_cast<int>(restr_.size()); }

    GKMClass operator+(const GKMClass& other) const;
    GKMClass operator-(const GKMClass& other) const;
    GKMClass scaled(const Polynomial& c) const;
    GKMClass scaled(const Rational& c) const;
    bool operator==(const GKMClass& other) const;

private:
    ContextPtr ctx_;
    Flavor flavor_;
    std::vector<Polynomial> restr_;
};

struct EdgeFailure {
    CosetSystem::Edge edge;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    int edges_checked = 0;
    std::vector<EdgeFailure> failures;
};

// Per-edge divisibility / quotient-equality checks of the flavor's condition.
// Straight differences are checked against both y_i - y_j and y_sigma - y_tau
// (proportional forms, both tested); cone entries are compared modulo
// <y_sigma - z, y_tau - z>; weighted entries must lie in the yw subring and
// differ by a multiple of w_tau yw_sigma - w_sigma yw_tau.
VerifyReport verify_gkm(const GKMClass& c);

// Pointwise product; same flavor and context required.
GKMClass gkm_multiply(const GKMClass& a, const GKMClass& b);

struct Expansion {
    bool ok = false;
    std::map<int, Polynomial> coeffs;  // rep index -> base-ring coefficient
    std::string error;
};

// Structure-constant oracle: ascending elimination along the Bruhat order,
// dividing each minimal nonzero restriction exactly by the diagonal factors.
// Defined for the straight and weighted flavors (cone tables are not a free
// module over the full base ring). Non-membership is reported, not asserted.
Expansion expand_in_basis(const GKMClass& c);

struct ChevalleyResult {
    bool entrywise_ok = false;
    bool oracle_ok = false;
    std::vector<int> cover_idxs;
    std::vector<Polynomial> multiplier;  // per fixed point
    std::string detail;                  // first failure, empty when ok
};

// Verifies  xi_{s_d} * xi_sigma = multiplier * xi_sigma + sum of cover
// classes,  entrywise, with the multiplier realized at each fixed point tau
// as the subring representative of  sum_{j<=d} (y_{sigma(j)} - y_j)  modulo
// <y_tau - z>  (weighted flavor) or as that constant form itself (straight).
// Independently, the expansion oracle must see exactly unit coefficients on
// the cover terms of  LHS - multiplier term.
ChevalleyResult chevalley_check(const ContextPtr& ctx, int d, const Permutation& sigma,
                                Flavor flavor, MonkConvention convention);

// The convention the expansion oracle validates on the n=3 full flag with
// weights (1,2,3), u=7; computed once and cached.
MonkConvention calibrated_chevalley_convention();

struct MonkIdentity {
    bool ok = false;
    Polynomial residual;
    std::vector<Permutation> covers;
};

// Exact polynomial identity in the S_{n+1} embedding with w_l = 0 beyond n:
//   wS_{s_d}(x) wS_sigma(x)
//     = (sum_{i<=d}(w_i - w_{sigma(i)})/u) x_id wS_sigma(x) + sum wS_{cover}(x).
MonkIdentity monk_identity_check(const SchubertEngine& eng, const FlagConfig& cfg,
                                 const WeightData& wd, const Permutation& sigma, int d,
                                 MonkConvention convention = MonkConvention::PositionSwap);

struct DoubleExpansion {
    bool ok = false;
    std::map<Permutation, Polynomial> coeffs;  // coefficients in Q[b]
    std::string error;
    int ambient = 0;
};

// Expand p in the double-Schubert basis by ascending triangular solve against
// the fixed-point specializations; the ambient size grows until the residual
// vanishes (or max_ambient is hit and the failure is reported).
DoubleExpansion expand_double_basis(const SchubertEngine& eng, const Polynomial& p,
                                    int max_ambient);

// Image of p under the presentation homomorphism: expand in the double basis,
// project coefficients (b_j -> y_j for j <= n, 0 beyond), and send each basis
// polynomial to the class of its inverse when that inverse is a minimal
// representative, dropping the rest. The tuple is transported to the target
// flavor restriction-wise.
GKMClass theta_image(const ContextPtr& ctx, const Polynomial& p, Flavor target);

}  // namespace wschub
