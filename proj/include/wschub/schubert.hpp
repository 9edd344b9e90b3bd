#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "wschub/perm.hpp"
#include "wschub/poly.hpp"
#include "wschub/tableau.hpp"

namespace wschub {

// Schubert and double Schubert polynomials over a shared universe, memoized.
// The cache is the only shared state: lookups and inserts are mutex guarded,
// recomputation is idempotent, so concurrent use is safe.
class SchubertEngine {
public:
    explicit SchubertEngine(UniversePtr uni) : uni_(std::move(uni)) {}

    const UniversePtr& universe() const { return uni_; }

    enum class DoubleRoute { SumFormula, DividedDifference };

    // Descends from x_1^{m-1} ... x_{m-1} along right ascents of sigma.
    Polynomial schubert(const Permutation& sigma, int m) const;
    // SumFormula transcribes the length-additive factorization definition;
    // DividedDifference descends from the product of (x_i - b_j), i+j <= m.
    // The two routes agree (cross-checked in tests) and are cached separately.
    Polynomial double_schubert(const Permutation& sigma, int m,
                               DoubleRoute route = DoubleRoute::DividedDifference) const;
    // Schubert polynomial evaluated at (-b_1, -b_2, ...).
    Polynomial schubert_neg_b(const Permutation& sigma, int m) const;

    // Substitute x_i -> b_{tau(i)} into the double polynomial: the full
    // restriction-table specialization. Vanishes unless tau >= sigma and is a
    // product of linear b-differences at tau = sigma.
    Polynomial kaji_specialize(const Permutation& sigma, const Permutation& tau, int m) const;

private:
    UniversePtr uni_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::vector<int>, int>, Polynomial> singles_;
    mutable std::map<std::pair<std::vector<int>, int>, Polynomial> doubles_dd_;
    mutable std::map<std::pair<std::vector<int>, int>, Polynomial> doubles_sum_;

    Polynomial schubert_uncached(const Permutation& sigma, int m) const;
    Polynomial double_dd_uncached(const Permutation& sigma, int m) const;
};

// The substitution data of the weighted coordinate change: the chi-weighted
// linear form x_id and the mutually inverse maps
//   b_l -> bw_l - (w_l/u) x_id      and      bw_l -> b_l + (w_l/u) x_id,
// with w_l = 0 beyond n. Requires u >= 1.
struct WeightedSubstitution {
    FlagConfig cfg;
    WeightData wd;
    UniversePtr uni;
    Polynomial x_id;

    WeightedSubstitution(FlagConfig cfg_, WeightData wd_, UniversePtr uni_);
    std::map<int, Polynomial> forward() const;
    std::map<int, Polynomial> inverse() const;
};

// Image of the double polynomial under b_l -> bw_l - (w_l/u) x_id.
Polynomial weighted_double_schubert(const SchubertEngine& eng, const Permutation& sigma, int m,
                                    const WeightedSubstitution& ws);
// The same with every bw_l set to zero: b_l -> -(w_l/u) x_id directly.
Polynomial weighted_schubert(const SchubertEngine& eng, const Permutation& sigma, int m,
                             const WeightedSubstitution& ws);

// Total weight of a representative per the chi coefficients, plus u.
long long rep_total_weight(const Permutation& sigma, const FlagConfig& cfg, const WeightData& wd);
// The chi-weighted combination of bw variables along sigma.
Polynomial bw_combination(const Permutation& sigma, const FlagConfig& cfg, const UniversePtr& uni);

// Fixed-point evaluation x_i -> bw_{tau(i)} - (w_{tau(i)}/w_tau) bw_tau on
// Q[x, bw]. The image of the x_id form is (u/w_tau) bw_tau; this is asserted.
// Indices beyond n carry zero weight.
Polynomial alpha_tau(const Polynomial& f, const Permutation& tau, const FlagConfig& cfg,
                     const WeightData& wd);

}  // namespace wschub
