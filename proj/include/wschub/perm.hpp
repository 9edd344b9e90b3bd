#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wschub {

// Element of S_infinity in one-line notation. Canonical form trims trailing
// fixed points, so S_n embeds in S_{n+1} without duplication; all entries
// beyond the stored word are fixed.
class Permutation {
public:
    Permutation() = default;  // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity() { return Permutation(); }
    static Permutation simple(int i);                 // s_i
    static Permutation transposition(int a, int b);   // t_{ab} on values

    int operator()(int i) const;  // 1-based
    int size() const { return static_cast<int>(word_.size()); }
    bool is_identity() const { return word_.empty(); }
    std::vector<int> word(int m = 0) const;  // padded to at least m
    const std::vector<int>& canonical_word() const { return word_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& g) const;  // (f*g)(i) = f(g(i))

    int length() const;
    std::vector<std::pair<int, int>> inversions() const;  // position pairs (i<j)

    bool operator==(const Permutation& g) const { return word_ == g.word_; }
    bool operator!=(const Permutation& g) const { return word_ != g.word_; }
    bool operator<(const Permutation& g) const;  // (length, lex word)

    std::string to_string(int m = 0) const;  // "1,4,2,3"; identity prints "id" when m == 0
    // Accepts one-line notation "1,4,2,3", "id", or reflection products "s2*s1"
    // (composed left to right as maps, rightmost acting first).
    static Permutation parse(const std::string& text);

private:
    std::vector<int> word_;
    void trim();
};

// Smallest-first descent walk; its step count is an independent length oracle.
std::vector<int> lex_min_reduced_word(const Permutation& p);

// Bruhat order via the dominance criterion:
// sigma <= tau iff #{k<=i : sigma(k) >= j} <= #{k<=i : tau(k) >= j} for all i,j.
bool bruhat_leq(const Permutation& sigma, const Permutation& tau);

// Flag data (n, 0 < d_1 < ... < d_r < n) with implicit d_0 = 0, d_{r+1} = n.
struct FlagConfig {
    int n = 0;
    std::vector<int> dims;

    FlagConfig(int n_, std::vector<int> dims_);
    int r() const { return static_cast<int>(dims.size()); }
    int block_of(int pos) const;    // 0..r
    int chi_coeff(int pos) const;   // r - block, i.e. 0 beyond d_r
    bool is_full_flag() const;
    static FlagConfig full_flag(int n_);
    std::string to_string() const;
    bool operator==(const FlagConfig& o) const { return n == o.n && dims == o.dims; }
};

// Minimal-length coset representatives of S_n modulo the block subgroup
// S_{d1} x S_{d2-d1} x ... x S_{n-dr}: exactly the block-increasing words.
class CosetSystem {
public:
    explicit CosetSystem(FlagConfig cfg);

    const FlagConfig& config() const { return cfg_; }
    const std::vector<Permutation>& reps() const { return reps_; }
    int size() const { return static_cast<int>(reps_.size()); }
    const Permutation& rep(int idx) const { return reps_.at(idx); }

    int index_of(const Permutation& p) const;  // -1 when absent
    bool contains(const Permutation& p) const { return index_of(p) >= 0; }
    Permutation project(const Permutation& p) const;  // sort within blocks

    int dimension() const;                     // sum d_i (d_{i+1} - d_i)
    std::vector<long long> poincare() const;   // counts by length, palindromic

    // One record per (coset pair, value pair): sigma and project(t_{ij} sigma)
    // are distinct representatives. a < b are rep indices, i < j the values.
    struct Edge {
        int a, b;
        int i, j;
    };
    std::vector<Edge> reflection_edges() const;

private:
    FlagConfig cfg_;
    std::vector<Permutation> reps_;
    std::map<std::vector<int>, int> index_;
};

// Inversions of a minimal representative modulo the parabolic. For sigma in
// W^P every inversion crosses a block boundary, so this equals inversions();
// the crossing property is asserted. Throws if sigma is not a representative.
std::vector<std::pair<int, int>> inv_P(const Permutation& sigma, const CosetSystem& system);

enum class MonkConvention { ValueSwap, PositionSwap };

// Length-l(sigma)+1 representatives reached from sigma by a transposition
// indexed by i <= d < j: positions and right multiplication for PositionSwap,
// values and left multiplication for ValueSwap. Candidates are projected to
// minimal representatives, filtered by length, deduplicated and sorted.
std::vector<Permutation> monk_terms(const Permutation& sigma, int d, const CosetSystem& system,
                                    MonkConvention convention);

const char* to_string(MonkConvention c);

}  // namespace wschub
