#pragma once

// The q = 1 tensor space: V spanned by v_j x^p (p < c_j) with per-symbol reduction modulo
// (x - Q_0)...(x - Q_{c_j - 1}), the loop Lie generators acting on V^{(x)n} through the
// primitive coproduct, and the right action of H^{q=1}_{n,r} by slot permutation and
// x-multiplication.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ariki_koike.hpp"
#include "combinatorics.hpp"
#include "param_poly.hpp"

namespace akschur {

enum class QOneGen { E, F, H };

class QOneSpace {
public:
    explicit QOneSpace(std::vector<int> m_parts) : m_parts_(std::move(m_parts)) {
        if (m_parts_.empty()) throw std::invalid_argument("QOneSpace: need r >= 1");
        if (static_cast<int>(m_parts_.size()) > kMaxQ) throw std::invalid_argument("QOneSpace: too many Q variables");
        int k = 1;
        for (int mk : m_parts_) {
            if (mk < 1) throw std::invalid_argument("QOneSpace: block sizes must be positive");
            for (int t = 0; t < mk; ++t) c_.push_back(k);
            ++k;
        }
        for (int j = 1; j <= m(); ++j) {
            offset_.push_back(static_cast<int>(symbols_.size()));
            for (int p = 0; p < c(j); ++p) symbols_.push_back({j, p});
            // monic (x - Q_0) ... (x - Q_{c_j - 1}), low degree first
            std::vector<ParamPoly> P{ParamPoly(1)};
            for (int t = 0; t < c(j); ++t) {
                std::vector<ParamPoly> next(P.size() + 1);
                for (std::size_t d = 0; d < P.size(); ++d) {
                    next[d + 1] += P[d];
                    next[d] -= Qvar(t) * P[d];
                }
                P = std::move(next);
            }
            relation_.push_back(std::move(P));
        }
    }

    int m() const { return static_cast<int>(c_.size()); }
    int r() const { return static_cast<int>(m_parts_.size()); }
    const std::vector<int>& m_parts() const { return m_parts_; }
    int c(int j) const { return c_.at(static_cast<std::size_t>(j - 1)); }
    std::size_t dim() const { return symbols_.size(); }

    struct Symbol {
        int color, power;
    };
    const Symbol& symbol(std::size_t idx) const { return symbols_.at(idx); }
    std::size_t index(int color, int power) const { return static_cast<std::size_t>(offset_.at(color - 1) + power); }

    // k when color i is the last color of block k (i <= m-1), else 0
    int boundary(int i) const {
        if (i < 1 || i >= m()) return 0;
        return c(i) != c(i + 1) ? c(i) : 0;
    }

    // x^e reduced for symbol j, as coefficients of 1, x, ..., x^{c_j - 1}
    std::vector<ParamPoly> power(int j, int e) const {
        std::vector<ParamPoly> v(static_cast<std::size_t>(c(j)));
        v[0] = ParamPoly(1);
        for (int s = 0; s < e; ++s) v = times_x(j, v);
        for (int s = 0; s > e; --s) v = times_x_inv(j, v);
        return v;
    }

    std::vector<ParamPoly> times_x(int j, const std::vector<ParamPoly>& v) const {
        const auto& P = relation_[static_cast<std::size_t>(j - 1)];
        const std::size_t cj = v.size();
        std::vector<ParamPoly> out(cj);
        for (std::size_t d = 0; d + 1 < cj; ++d) out[d + 1] = v[d];
        const ParamPoly& top = v[cj - 1];
        if (!top.is_zero())
            for (std::size_t d = 0; d < cj; ++d) out[d] -= P[d] * top;
        return out;
    }

    // x^{-1} = -P_0^{-1} (P_1 + P_2 x + ... + x^{c-1}) on the constant term
    std::vector<ParamPoly> times_x_inv(int j, const std::vector<ParamPoly>& v) const {
        const auto& P = relation_[static_cast<std::size_t>(j - 1)];
        const std::size_t cj = v.size();
        std::vector<ParamPoly> out(cj);
        for (std::size_t d = 1; d < cj; ++d) out[d - 1] = v[d];
        if (!v[0].is_zero()) {
            ParamPoly s = -(P[0].unit_inverse()) * v[0];
            for (std::size_t d = 1; d <= cj; ++d) out[d - 1] += s * P[d];
        }
        return out;
    }

    using SiteVec = std::map<std::size_t, ParamPoly>;

    // v_j x^e as a reduced site vector
    SiteVec monomial(int j, int e) const {
        SiteVec out;
        auto v = power(j, e);
        for (int d = 0; d < c(j); ++d)
            if (!v[d].is_zero()) out[index(j, d)] = v[d];
        return out;
    }

    // Lie generator on one site basis vector.
    SiteVec act(QOneGen g, int i, int t, std::size_t site) const {
        const auto [j, p] = symbols_.at(site);
        SiteVec out;
        switch (g) {
            case QOneGen::E:
                if (j == i + 1) out = monomial(i, p + t);
                break;
            case QOneGen::F:
                if (j == i) {
                    out = monomial(i + 1, p + t);
                    if (int k = boundary(i)) {
                        ParamPoly s = -Qvar(k).unit_inverse();
                        for (const auto& [idx, c] : monomial(i + 1, p + t + 1)) add(out, idx, s * c);
                    }
                }
                break;
            case QOneGen::H:
                if (j == i) out = monomial(j, p + t);
                if (j == i + 1) {
                    for (auto& [idx, c] : monomial(j, p + t)) out[idx] = -c;
                }
                break;
        }
        return out;
    }

    static void add(SiteVec& v, std::size_t idx, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto& x = v[idx];
        x += c;
        if (x.is_zero()) v.erase(idx);
    }

private:
    std::vector<int> m_parts_;
    std::vector<int> c_;
    std::vector<Symbol> symbols_;
    std::vector<int> offset_;
    std::vector<std::vector<ParamPoly>> relation_;
};

// Element of V^{(x)n}: site indices per slot -> coefficient.
class TensorState {
public:
    using Key = std::vector<std::uint16_t>;

    void add(const Key& k, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    TensorState& operator+=(const TensorState& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    friend TensorState operator-(TensorState a, const TensorState& b) {
        for (const auto& [k, c] : b.terms_) a.add(k, -c);
        return a;
    }
    friend TensorState operator*(const ParamPoly& s, const TensorState& a) {
        TensorState out;
        for (const auto& [k, c] : a.terms_) out.add(k, s * c);
        return out;
    }
    friend bool operator==(const TensorState& a, const TensorState& b) { return a.terms_ == b.terms_; }

    const std::map<Key, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::map<Key, ParamPoly> terms_;
};

class QOneTensor {
public:
    QOneTensor(const QOneSpace& V, int n) : V_(V), n_(n) {
        if (n < 1) throw std::invalid_argument("QOneTensor: n must be positive");
        std::size_t total = 1;
        for (int s = 0; s < n; ++s) total *= V.dim();
        keys_.reserve(total);
        TensorState::Key k(static_cast<std::size_t>(n), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t x = idx;
            for (int s = n - 1; s >= 0; --s) {
                k[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(x % V.dim());
                x /= V.dim();
            }
            keys_.push_back(k);
        }
    }

    const QOneSpace& space() const { return V_; }
    int n() const { return n_; }
    std::size_t dim() const { return keys_.size(); }
    const TensorState::Key& key(std::size_t idx) const { return keys_[idx]; }
    std::size_t index(const TensorState::Key& k) const {
        std::size_t x = 0;
        for (auto s : k) x = x * V_.dim() + s;
        return x;
    }

    // flat weight (color multiplicities) of a basis tensor
    Composition weight(const TensorState::Key& k) const {
        Composition w(static_cast<std::size_t>(V_.m()), 0);
        for (auto s : k) ++w[static_cast<std::size_t>(V_.symbol(s).color - 1)];
        return w;
    }

    TensorState basis(std::size_t idx) const {
        TensorState t;
        t.add(keys_[idx], ParamPoly(1));
        return t;
    }

    // v'_mu = v_1^{mu_1} (x) v_2^{mu_2} (x) ... with all powers x^0
    TensorState v_prime(const Composition& mu) const {
        TensorState::Key k;
        for (int j = 1; j <= V_.m(); ++j)
            for (int t = 0; t < mu[static_cast<std::size_t>(j - 1)]; ++t)
                k.push_back(static_cast<std::uint16_t>(V_.index(j, 0)));
        if (static_cast<int>(k.size()) != n_) throw std::invalid_argument("v_prime: weight size differs from n");
        TensorState t;
        t.add(k, ParamPoly(1));
        return t;
    }

    // sum over slots of the single-site action
    TensorState act(QOneGen g, int i, int t, const TensorState& v) const {
        TensorState out;
        for (const auto& [k, c] : v.terms()) {
            for (int s = 0; s < n_; ++s) {
                for (const auto& [site, cs] : V_.act(g, i, t, k[static_cast<std::size_t>(s)])) {
                    auto k2 = k;
                    k2[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(site);
                    out.add(k2, c * cs);
                }
            }
        }
        return out;
    }

    // v T_i: swap slots i and i+1 (1 <= i <= n-1); v T_0 = v L_1
    TensorState times_T(const TensorState& v, int i) const {
        if (i == 0) return times_L(v, 1, 1);
        TensorState out;
        for (const auto& [k, c] : v.terms()) {
            auto k2 = k;
            std::swap(k2[static_cast<std::size_t>(i - 1)], k2[static_cast<std::size_t>(i)]);
            out.add(k2, c);
        }
        return out;
    }

    // v L_j^e: slot j multiplied by x^e
    TensorState times_L(const TensorState& v, int j, int e) const {
        TensorState out;
        const auto s = static_cast<std::size_t>(j - 1);
        for (const auto& [k, c] : v.terms()) {
            const auto sym = V_.symbol(k[s]);
            for (const auto& [site, cs] : V_.monomial(sym.color, sym.power + e)) {
                auto k2 = k;
                k2[s] = static_cast<std::uint16_t>(site);
                out.add(k2, c * cs);
            }
        }
        return out;
    }

    // right action of an element of H^{q=1}_{n,r} written in the basis L^k T_w
    TensorState times(const TensorState& v, const AKAlgebra<ParamPoly>& A, const AKElement<ParamPoly>& h) const {
        TensorState out;
        for (const auto& [idx, c] : h.terms()) {
            TensorState w = v;
            auto k = A.exponents(idx);
            for (int j = 1; j <= n_; ++j)
                if (k[static_cast<std::size_t>(j - 1)]) w = times_L(w, j, k[static_cast<std::size_t>(j - 1)]);
            for (int letter : A.reduced_word(A.perm_of(idx))) w = times_T(w, letter);
            out += c * w;
        }
        return out;
    }

private:
    const QOneSpace& V_;
    int n_;
    std::vector<TensorState::Key> keys_;
};

}  // namespace akschur
