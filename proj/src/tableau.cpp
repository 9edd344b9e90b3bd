#include "wschub/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wschub {

StaircaseShape StaircaseShape::of(const FlagConfig& cfg) {
    StaircaseShape s;
    int r = cfg.r();
    int prev = 0;
    for (int k = 0; k < r; ++k) {
        for (int row = 0; row < cfg.dims[k] - prev; ++row) s.rows.push_back(r - k);
        prev = cfg.dims[k];
    }
    return s;
}

int StaircaseShape::col_height(int c) const {
    int h = 0;
    for (int len : rows)
        if (len >= c) ++h;
    return h;
}

int StaircaseShape::boxes() const {
    int b = 0;
    for (int len : rows) b += len;
    return b;
}

bool Tableau::is_semistandard(int n) const {
    if (static_cast<int>(rows.size()) != shape.num_rows()) return false;
    for (int i = 0; i < shape.num_rows(); ++i)
        if (static_cast<int>(rows[i].size()) != shape.rows[i]) return false;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n) return false;
            if (j > 0 && rows[i][j - 1] > v) return false;
            if (i > 0 && j < rows[i - 1].size() && rows[i - 1][j] >= v) return false;
        }
    }
    return true;
}

std::vector<int> Tableau::weight(int n) const {
    std::vector<int> e(n, 0);
    for (const auto& row : rows)
        for (int v : row) e.at(v - 1) += 1;
    return e;
}

std::vector<int> Tableau::weight_sl(int n) const {
    std::vector<int> e = weight(n);
    int lo = *std::min_element(e.begin(), e.end());
    for (int& v : e) v -= lo;
    return e;
}

std::string Tableau::weight_string(int n, bool sl_normalized) const {
    std::vector<int> e = sl_normalized ? weight_sl(n) : weight(n);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << "t" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
    }
    return any ? os.str() : "1";
}

long long Tableau::entry_weight_sum(const std::vector<long long>& w) const {
    long long s = 0;
    for (const auto& row : rows)
        for (int v : row) s += w.at(v - 1);
    return s;
}

long long Tableau::total_weight(const WeightData& wd) const {
    return entry_weight_sum(wd.weights) + wd.u;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ",";
            os << rows[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Tableau> enumerate_tableaux(const StaircaseShape& shape, int n) {
    if (n < shape.num_rows())
        throw std::invalid_argument("entry bound smaller than the number of rows");
    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.num_rows());
    for (int i = 0; i < shape.num_rows(); ++i) t.rows[i].assign(shape.rows[i], 0);

    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == shape.num_rows()) {
            out.push_back(t);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == shape.rows[i]) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
        if (i > 0 && j < static_cast<int>(t.rows[i - 1].size())) lo = std::max(lo, t.rows[i - 1][j] + 1);
        for (int v = lo; v <= n; ++v) {
            t.rows[i][j] = v;
            fill(ni, nj);
        }
        t.rows[i][j] = 0;
    };
    if (shape.num_rows() == 0) out.push_back(t);
    else fill(0, 0);
    return out;
}

Tableau tableau_of_perm(const Permutation& sigma, const CosetSystem& system) {
    if (!system.contains(sigma))
        throw std::invalid_argument("not a minimal coset representative: " + sigma.to_string());
    const FlagConfig& cfg = system.config();
    StaircaseShape shape = StaircaseShape::of(cfg);
    int r = cfg.r();
    std::vector<std::vector<int>> cols(r);
    for (int c = 1; c <= r; ++c) {
        int height = cfg.dims[r - c];  // d_{r-c+1}
        assert(height == shape.col_height(c));
        for (int k = 1; k <= height; ++k) cols[c - 1].push_back(sigma(k));
        std::sort(cols[c - 1].begin(), cols[c - 1].end());
    }
    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.num_rows());
    for (int i = 0; i < shape.num_rows(); ++i)
        for (int c = 1; c <= shape.rows[i]; ++c) t.rows[i].push_back(cols[c - 1][i]);
    assert(t.is_semistandard(cfg.n));
    return t;
}

static Polynomial minor_det(const UniversePtr& uni, const std::vector<int>& col_entries) {
    int l = static_cast<int>(col_entries.size());
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det(uni);
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Monomial m;
        for (int i = 0; i < l; ++i) {
            Monomial f;
            f.factors.emplace_back(uni->xg(i + 1, col_entries[perm[i]]), 1);
            m = monomial_mul(m, f);
        }
        det.add_term(m, Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Polynomial pluecker_polynomial(const Tableau& tab, const UniversePtr& uni) {
    Polynomial prod = Polynomial::constant(uni, 1);
    for (int c = 1; c <= tab.shape.num_cols(); ++c) {
        std::vector<int> col;
        for (size_t i = 0; i < tab.rows.size(); ++i)
            if (c <= static_cast<int>(tab.rows[i].size())) col.push_back(tab.rows[i][c - 1]);
        prod = prod * minor_det(uni, col);
    }
    return prod;
}

long long min_admissible_u(const std::vector<long long>& weights, const FlagConfig& cfg) {
    if (static_cast<int>(weights.size()) != cfg.n)
        throw std::invalid_argument("weight vector length must equal n");
    StaircaseShape shape = StaircaseShape::of(cfg);
    long long lo = std::numeric_limits<long long>::max();
    for (const Tableau& t : enumerate_tableaux(shape, cfg.n))
        lo = std::min(lo, t.entry_weight_sum(weights));
    return lo > 0 ? 0 : 1 - lo;
}

WeightData::WeightData(std::vector<long long> weights_, long long u_, const FlagConfig& cfg)
    : weights(std::move(weights_)), u(u_) {
    if (u < 0) throw std::invalid_argument("u must be non-negative");
    long long need = min_admissible_u(weights, cfg);
    if (u < need)
        throw std::invalid_argument("u too small: need u >= " + std::to_string(need) +
                                    " for positive total weights");
}

bool WeightData::all_zero() const {
    return std::all_of(weights.begin(), weights.end(), [](long long w) { return w == 0; });
}

}  // namespace wschub
