#pragma once

#include <string>
#include <vector>

#include "wschub/perm.hpp"
#include "wschub/poly.hpp"

namespace wschub {

// Row lengths of the highest-weight shape: d_1 rows of length r, then
// d_2 - d_1 rows of length r-1, ..., d_r - d_{r-1} rows of length 1.
struct StaircaseShape {
    std::vector<int> rows;

    static StaircaseShape of(const FlagConfig& cfg);
    int num_rows() const { return static_cast<int>(rows.size()); }
    int num_cols() const { return rows.empty() ? 0 : rows.front(); }
    int col_height(int c) const;  // 1-based column
    int boxes() const;
    bool operator==(const StaircaseShape& o) const { return rows == o.rows; }
};

struct WeightData;

// Semi-standard filling: weakly increasing across rows, strictly increasing
// down columns, entries in {1..n}.
struct Tableau {
    StaircaseShape shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard(int n) const;
    std::vector<int> weight(int n) const;                  // exponents of t_1..t_n
    std::vector<int> weight_sl(int n) const;               // modulo the determinant character
    std::string weight_string(int n, bool sl_normalized) const;
    long long entry_weight_sum(const std::vector<long long>& w) const;
    long long total_weight(const WeightData& wd) const;    // sum of w_i over entries, plus u
    std::string to_string() const;                         // [[1,1],[2]]
    bool operator==(const Tableau& o) const { return shape == o.shape && rows == o.rows; }
};

// All semi-standard fillings with entries <= n, in row-major lexicographic
// order on the concatenated entries.
std::vector<Tableau> enumerate_tableaux(const StaircaseShape& shape, int n);

// Column i of the tableau of sigma holds {sigma(1),...,sigma(d_{r-i+1})} in
// increasing order; the identity maps to the filling with row i constant i.
Tableau tableau_of_perm(const Permutation& sigma, const CosetSystem& system);

// Product over the columns c of det(xg(i, c_j)), expanded.
Polynomial pluecker_polynomial(const Tableau& tab, const UniversePtr& uni);

// Least u >= 0 making every total weight positive.
long long min_admissible_u(const std::vector<long long>& weights, const FlagConfig& cfg);

// One-parameter-subgroup weights w_1..w_n plus the character shift u. The
// positivity of every total weight w_Y is checked at construction.
struct WeightData {
    std::vector<long long> weights;
    long long u = 1;

    WeightData(std::vector<long long> weights_, long long u_, const FlagConfig& cfg);
    bool all_zero() const;
};

}  // namespace wschub
