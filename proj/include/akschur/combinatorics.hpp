#pragma once

// Compositions, r-compositions and their profiles, and type A permutations with
// parabolic subgroups and distinguished coset representatives.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace akschur {

using Composition = std::vector<int>;

inline int composition_size(const Composition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

inline std::string to_string(const Composition& mu) {
    std::string s = "(";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s + ")";
}

// All compositions of n with m parts; the first part runs from n down to 0, then recursively.
inline std::vector<Composition> enumerate_compositions(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("enumerate_compositions: need n >= 0, m >= 1");
    std::vector<Composition> out;
    Composition cur(m, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

// Block sizes m_1..m_r together with a flat composition of length m_1+...+m_r.
class MultiComposition {
public:
    MultiComposition() = default;
    MultiComposition(std::vector<int> m_parts, Composition flat) : m_(std::move(m_parts)), flat_(std::move(flat)) {
        if (m_.empty()) throw std::invalid_argument("MultiComposition: r must be positive");
        int total = 0;
        for (int mk : m_) {
            if (mk < 1) throw std::invalid_argument("MultiComposition: block sizes must be positive");
            total += mk;
        }
        if (static_cast<int>(flat_.size()) != total)
            throw std::invalid_argument("MultiComposition: flat length differs from sum of block sizes");
        for (int x : flat_)
            if (x < 0) throw std::invalid_argument("MultiComposition: negative part");
    }

    static MultiComposition from_blocks(const std::vector<Composition>& blocks) {
        std::vector<int> m;
        Composition flat;
        for (const auto& b : blocks) {
            m.push_back(static_cast<int>(b.size()));
            flat.insert(flat.end(), b.begin(), b.end());
        }
        return MultiComposition(m, flat);
    }

    int r() const { return static_cast<int>(m_.size()); }
    int m() const { return static_cast<int>(flat_.size()); }
    int n() const { return composition_size(flat_); }
    const std::vector<int>& m_parts() const { return m_; }
    const Composition& flat() const { return flat_; }

    std::vector<Composition> blocks() const {
        std::vector<Composition> out;
        std::size_t pos = 0;
        for (int mk : m_) {
            out.emplace_back(flat_.begin() + static_cast<std::ptrdiff_t>(pos),
                             flat_.begin() + static_cast<std::ptrdiff_t>(pos + mk));
            pos += static_cast<std::size_t>(mk);
        }
        return out;
    }

    // |mu^(k)| for k = 1..r
    int block_size(int k) const {
        auto b = blocks();
        return composition_size(b.at(static_cast<std::size_t>(k - 1)));
    }

    // Flat index of (i, k): m_1 + ... + m_{k-1} + i; i and k are 1-based.
    int xi(int i, int k) const {
        int s = 0;
        for (int p = 0; p < k - 1; ++p) s += m_[p];
        return s + i;
    }

    std::pair<int, int> xi_inverse(int flat_index) const {
        int s = 0;
        for (int k = 1; k <= r(); ++k) {
            if (flat_index <= s + m_[k - 1]) return {flat_index - s, k};
            s += m_[k - 1];
        }
        throw std::out_of_range("xi_inverse: index beyond m");
    }

    // k when the flat index i (1 <= i <= m-1) is the last slot of block k, else nullopt.
    std::optional<int> boundary(int i) const {
        if (i < 1 || i >= m()) return std::nullopt;
        auto [ii, k] = xi_inverse(i);
        if (ii == m_[k - 1]) return k;
        return std::nullopt;
    }

    std::string to_string() const {
        std::string s = "(";
        auto b = blocks();
        for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + akschur::to_string(b[k]);
        return s + ")";
    }

    friend bool operator==(const MultiComposition& a, const MultiComposition& b) {
        return a.m_ == b.m_ && a.flat_ == b.flat_;
    }

private:
    std::vector<int> m_;
    Composition flat_;
};

inline std::vector<MultiComposition> enumerate_multicompositions(int n, const std::vector<int>& m_parts) {
    int m = std::accumulate(m_parts.begin(), m_parts.end(), 0);
    std::vector<MultiComposition> out;
    for (auto& c : enumerate_compositions(n, m)) out.emplace_back(m_parts, c);
    return out;
}

// N_i (i = 0..m), a_k (k = 0..r), c_j (j = 1..n; index 0 unused).
struct Profile {
    std::vector<int> N, a, c;
};

inline Profile profile(const MultiComposition& mu) {
    Profile pr;
    const auto& f = mu.flat();
    pr.N.assign(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) pr.N[i + 1] = pr.N[i] + f[i];
    pr.a.assign(static_cast<std::size_t>(mu.r()) + 1, 0);
    for (int k = 1; k <= mu.r(); ++k) pr.a[k] = pr.a[k - 1] + mu.block_size(k);
    int n = mu.n();
    pr.c.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= mu.r(); ++k)
            if (pr.a[k - 1] < j && j <= pr.a[k]) pr.c[j] = k;
    return pr;
}

// Permutation of {1..n} in one-line notation, stored 0-based: img[j] = w(j+1) - 1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (int x : img_) {
            if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[x] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(v);
    }

    // s_i = (i, i+1), 1 <= i <= n-1
    static Permutation simple(int n, int i) {
        auto w = identity(n);
        std::swap(w.img_[i - 1], w.img_[i]);
        return w;
    }

    // Product s_{i_1} s_{i_2} ... s_{i_k}.
    static Permutation from_word(int n, const std::vector<int>& word) {
        auto w = identity(n);
        for (int i : word) w = w * simple(n, i);
        return w;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[j - 1] + 1; }  // 1-based evaluation
    const std::vector<int>& images() const { return img_; }

    // (u v)(j) = u(v(j))
    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        std::vector<int> out(v.img_.size());
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = u.img_[v.img_[j]];
        return Permutation(out);
    }

    Permutation inverse() const {
        std::vector<int> out(img_.size());
        for (std::size_t j = 0; j < out.size(); ++j) out[img_[j]] = static_cast<int>(j);
        return Permutation(out);
    }

    int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < img_.size(); ++a)
            for (std::size_t b = a + 1; b < img_.size(); ++b)
                if (img_[a] > img_[b]) ++inv;
        return inv;
    }

    // Reduced word w = s_{i_1} ... s_{i_k} obtained by peeling off the largest right descent.
    std::vector<int> reduced_word() const {
        std::vector<int> rev;
        Permutation w = *this;
        while (true) {
            int d = 0;
            for (int i = w.n() - 1; i >= 1; --i)
                if (w.img_[i - 1] > w.img_[i]) {
                    d = i;
                    break;
                }
            if (!d) break;
            rev.push_back(d);
            std::swap(w.img_[d - 1], w.img_[d]);  // w <- w s_d
        }
        return {rev.rbegin(), rev.rend()};
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t j = 0; j < img_.size(); ++j) s += (j ? " " : "") + std::to_string(img_[j] + 1);
        return s + "]";
    }

private:
    std::vector<int> img_;
};

// All permutations of n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Parabolic subgroup S_mu and distinguished right coset representatives S^mu
// (minimal length in S_mu y).
class CosetData {
public:
    explicit CosetData(Composition mu) : mu_(std::move(mu)), n_(composition_size(mu_)) {
        int start = 0;
        block_of_.assign(n_, 0);
        int b = 0;
        for (int part : mu_) {
            for (int t = 1; t < part; ++t) gens_.push_back(start + t);
            for (int t = 0; t < part; ++t) block_of_[start + t] = b;
            start += part;
            ++b;
        }
    }

    const Composition& composition() const { return mu_; }
    const std::vector<int>& generators() const { return gens_; }

    bool in_parabolic(const Permutation& w) const {
        for (int j = 0; j < n_; ++j)
            if (block_of_[j] != block_of_[w.images()[j]]) return false;
        return true;
    }

    bool is_distinguished(const Permutation& y) const {
        Permutation yi = y.inverse();
        for (int i : gens_)
            if (yi(i) > yi(i + 1)) return false;
        return true;
    }

    std::vector<Permutation> parabolic() const {
        std::vector<Permutation> out;
        for (auto& w : all_permutations(n_))
            if (in_parabolic(w)) out.push_back(w);
        return out;
    }

    std::vector<Permutation> representatives() const {
        std::vector<Permutation> out;
        for (auto& w : all_permutations(n_))
            if (is_distinguished(w)) out.push_back(w);
        return out;
    }

    long long num_representatives() const {
        long long d = 1;
        for (int part : mu_) d *= factorial(part);
        return factorial(n_) / d;
    }

    // w = x y with x in S_mu and y in S^mu: y^{-1} sorts w^{-1} inside each block.
    std::pair<Permutation, Permutation> decompose(const Permutation& w) const {
        std::vector<int> winv = w.inverse().images();
        std::vector<int> yinv = winv;
        int start = 0;
        for (int part : mu_) {
            std::sort(yinv.begin() + start, yinv.begin() + start + part);
            start += part;
        }
        Permutation y = Permutation(yinv).inverse();
        Permutation x = w * y.inverse();
        return {x, y};
    }

private:
    Composition mu_;
    int n_;
    std::vector<int> gens_;
    std::vector<int> block_of_;
};

}  // namespace akschur
