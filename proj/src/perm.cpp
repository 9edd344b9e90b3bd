#include "wschub/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wschub {

void Permutation::trim() {
    while (!word_.empty() && word_.back() == static_cast<int>(word_.size())) word_.pop_back();
}

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    int m = static_cast<int>(word_.size());
    std::vector<bool> seen(m + 1, false);
    for (int v : word_) {
        if (v < 1 || v > m || seen[v])
            throw std::invalid_argument("not a permutation word");
        seen[v] = true;
    }
    trim();
}

Permutation Permutation::simple(int i) {
    if (i < 1) throw std::invalid_argument("simple reflection index must be >= 1");
    std::vector<int> w(i + 1);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int a, int b) {
    if (a < 1 || b < 1 || a == b) throw std::invalid_argument("bad transposition");
    if (a > b) std::swap(a, b);
    std::vector<int> w(b);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[a - 1], w[b - 1]);
    return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
    if (i < 1) throw std::out_of_range("permutation argument must be >= 1");
    return i <= size() ? word_[i - 1] : i;
}

std::vector<int> Permutation::word(int m) const {
    std::vector<int> w = word_;
    for (int i = size() + 1; i <= m; ++i) w.push_back(i);
    return w;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[word_[i - 1] - 1] = i;
    Permutation r;
    r.word_ = std::move(w);
    r.trim();
    return r;
}

Permutation Permutation::operator*(const Permutation& g) const {
    int m = std::max(size(), g.size());
    std::vector<int> w(m);
    for (int i = 1; i <= m; ++i) w[i - 1] = (*this)(g(i));
    Permutation r;
    r.word_ = std::move(w);
    r.trim();
    return r;
}

int Permutation::length() const {
    int l = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (word_[i - 1] > word_[j - 1]) ++l;
    return l;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
    std::vector<std::pair<int, int>> inv;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (word_[i - 1] > word_[j - 1]) inv.emplace_back(i, j);
    return inv;
}

bool Permutation::operator<(const Permutation& g) const {
    int la = length(), lb = g.length();
    if (la != lb) return la < lb;
    int m = std::max(size(), g.size());
    return word(m) < g.word(m);
}

std::string Permutation::to_string(int m) const {
    if (m == 0 && is_identity()) return "id";
    std::vector<int> w = word(std::max(m, std::max(size(), 1)));
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os.str();
}

Permutation Permutation::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "id") return Permutation();
    if (s[0] == 's') {
        Permutation p;
        size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] == '*') { ++pos; continue; }
            if (s[pos] != 's') throw std::invalid_argument("bad reflection word: " + text);
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("bad reflection word: " + text);
            p = p * Permutation::simple(std::stoi(s.substr(start, pos - start)));
        }
        return p;
    }
    std::vector<int> w;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("bad one-line word: " + text);
        w.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(w));
}

std::vector<int> lex_min_reduced_word(const Permutation& p) {
    std::vector<int> word;
    Permutation cur = p;
    while (!cur.is_identity()) {
        int i = 1;
        while (cur(i) < cur(i + 1)) ++i;  // a descent exists for non-identity
        word.push_back(i);
        cur = cur * Permutation::simple(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool bruhat_leq(const Permutation& sigma, const Permutation& tau) {
    int m = std::max(sigma.size(), tau.size());
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            int cs = 0, ct = 0;
            for (int k = 1; k <= i; ++k) {
                if (sigma(k) >= j) ++cs;
                if (tau(k) >= j) ++ct;
            }
            if (cs > ct) return false;
        }
    }
    return true;
}

FlagConfig::FlagConfig(int n_, std::vector<int> dims_) : n(n_), dims(std::move(dims_)) {
    if (n < 2) throw std::invalid_argument("flag config needs n >= 2");
    if (dims.empty()) throw std::invalid_argument("flag config needs at least one dimension");
    int prev = 0;
    for (int d : dims) {
        if (d <= prev) throw std::invalid_argument("dims must be strictly increasing");
        prev = d;
    }
    if (dims.back() >= n) throw std::invalid_argument("dims must stay below n");
}

int FlagConfig::block_of(int pos) const {
    if (pos < 1 || pos > n) throw std::out_of_range("position out of range");
    int p = 0;
    for (int d : dims) {
        if (pos <= d) return p;
        ++p;
    }
    return r();
}

int FlagConfig::chi_coeff(int pos) const { return r() - block_of(pos); }

bool FlagConfig::is_full_flag() const {
    if (r() != n - 1) return false;
    for (int i = 0; i < r(); ++i)
        if (dims[i] != i + 1) return false;
    return true;
}

FlagConfig FlagConfig::full_flag(int n_) {
    std::vector<int> d(n_ - 1);
    std::iota(d.begin(), d.end(), 1);
    return FlagConfig(n_, std::move(d));
}

std::string FlagConfig::to_string() const {
    std::ostringstream os;
    os << "n=" << n << " dims=";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    return os.str();
}

CosetSystem::CosetSystem(FlagConfig cfg) : cfg_(std::move(cfg)) {
    std::vector<int> w(cfg_.n);
    std::iota(w.begin(), w.end(), 1);
    do {
        bool ok = true;
        for (int pos = 1; pos < cfg_.n && ok; ++pos)
            if (cfg_.block_of(pos) == cfg_.block_of(pos + 1) && w[pos - 1] > w[pos]) ok = false;
        if (ok) reps_.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(reps_.begin(), reps_.end());
    for (int i = 0; i < size(); ++i) index_[reps_[i].word(cfg_.n)] = i;
}

int CosetSystem::index_of(const Permutation& p) const {
    if (p.size() > cfg_.n) return -1;
    auto it = index_.find(p.word(cfg_.n));
    return it == index_.end() ? -1 : it->second;
}

Permutation CosetSystem::project(const Permutation& p) const {
    if (p.size() > cfg_.n) throw std::invalid_argument("permutation exceeds ambient size");
    std::vector<int> w = p.word(cfg_.n);
    int lo = 0;
    std::vector<int> bounds = cfg_.dims;
    bounds.push_back(cfg_.n);
    for (int hi : bounds) {
        std::sort(w.begin() + lo, w.begin() + hi);
        lo = hi;
    }
    return Permutation(std::move(w));
}

int CosetSystem::dimension() const {
    int dim = 0;
    std::vector<int> d = cfg_.dims;
    d.push_back(cfg_.n);
    for (size_t i = 0; i + 1 < d.size(); ++i) dim += d[i] * (d[i + 1] - d[i]);
    return dim;
}

std::vector<long long> CosetSystem::poincare() const {
    std::vector<long long> counts(dimension() + 1, 0);
    for (const auto& p : reps_) counts.at(p.length()) += 1;
    long long total = 0;
    for (long long c : counts) total += c;
    assert(total == size());
    assert(counts.front() == 1 && counts.back() == 1);
    for (size_t k = 0; k < counts.size(); ++k)
        assert(counts[k] == counts[counts.size() - 1 - k]);
    return counts;
}

std::vector<CosetSystem::Edge> CosetSystem::reflection_edges() const {
    std::set<std::tuple<int, int, int, int>> seen;
    std::vector<Edge> edges;
    for (int a = 0; a < size(); ++a) {
        for (int i = 1; i <= cfg_.n; ++i) {
            for (int j = i + 1; j <= cfg_.n; ++j) {
                Permutation tau = project(Permutation::transposition(i, j) * reps_[a]);
                int b = index_of(tau);
                assert(b >= 0);
                if (b == a) continue;  // reflection inside the parabolic
                auto key = std::make_tuple(std::min(a, b), std::max(a, b), i, j);
                if (seen.insert(key).second)
                    edges.push_back(Edge{std::get<0>(key), std::get<1>(key), i, j});
            }
        }
    }
    return edges;
}

std::vector<std::pair<int, int>> inv_P(const Permutation& sigma, const CosetSystem& system) {
    if (!system.contains(sigma))
        throw std::invalid_argument("not a minimal coset representative: " + sigma.to_string());
    auto inv = sigma.inversions();
    for (const auto& [i, j] : inv)
        assert(system.config().block_of(i) != system.config().block_of(j));
    return inv;
}

std::vector<Permutation> monk_terms(const Permutation& sigma, int d, const CosetSystem& system,
                                    MonkConvention convention) {
    const FlagConfig& cfg = system.config();
    if (std::find(cfg.dims.begin(), cfg.dims.end(), d) == cfg.dims.end())
        throw std::invalid_argument("d is not one of the flag dimensions");
    if (!system.contains(sigma))
        throw std::invalid_argument("not a minimal coset representative: " + sigma.to_string());
    std::set<Permutation> out;
    int target = sigma.length() + 1;
    for (int i = 1; i <= d; ++i) {
        for (int j = d + 1; j <= cfg.n; ++j) {
            Permutation candidate;
            if (convention == MonkConvention::PositionSwap) {
                std::vector<int> w = sigma.word(cfg.n);
                std::swap(w[i - 1], w[j - 1]);
                candidate = Permutation(std::move(w));
            } else {
                candidate = Permutation::transposition(i, j) * sigma;
            }
            Permutation tau = system.project(candidate);
            if (tau.length() == target) out.insert(tau);
        }
    }
    return std::vector<Permutation>(out.begin(), out.end());
}

const char* to_string(MonkConvention c) {
    return c == MonkConvention::PositionSwap ? "position-swap" : "value-swap";
}

}  // namespace wschub
