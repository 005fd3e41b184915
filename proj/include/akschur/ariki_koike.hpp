#pragma once

// Ariki-Koike algebra H_{n,r} in the normal-form basis L_1^{k_1}...L_n^{k_n} T_w.
//
// Left multiplication by a generator is closed on the basis: T_0 = L_1 raises k_1 and
// reduces L_1^r with the cyclotomic polynomial, while T_i is moved past L_i^a L_{i+1}^b by
//   T_i x^a y^b = x^b y^a T_i + (q - q^{-1}) y (x^a y^b - x^b y^a) / (y - x),
// (x = L_i, y = L_{i+1}) and then folded into T_w with the quadratic relation.  Products
// of general elements expand the left factor into generator words.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "param_poly.hpp"
#include "prime_field.hpp"

namespace akschur {

template <class S>
struct AKParams {
    int n = 1, r = 1;
    S one, q, qinv;
    std::vector<S> Q, Qinv;

    S delta() const { return q - qinv; }

    S qpow(int e) const {
        S out = one;
        const S& b = e >= 0 ? q : qinv;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) out = out * b;
        return out;
    }
    S integer(long c) const { return scalar_from_int(one, c); }
};

inline AKParams<ParamPoly> generic_params(int n, int r) {
    if (r > kMaxQ) throw std::invalid_argument("r exceeds the number of parameter slots");
    AKParams<ParamPoly> p;
    p.n = n;
    p.r = r;
    p.one = ParamPoly(1);
    p.q = qpow(1);
    p.qinv = qpow(-1);
    for (int k = 0; k < r; ++k) {
        p.Q.push_back(Qvar(k));
        p.Qinv.push_back(ParamPoly::var(var_Q(k), -1));
    }
    return p;
}

// q specialized to 1, Q_k kept symbolic.
inline AKParams<ParamPoly> q_one_params(int n, int r) {
    auto p = generic_params(n, r);
    p.q = ParamPoly(1);
    p.qinv = ParamPoly(1);
    return p;
}

inline AKParams<Fp> point_params(int n, int r, const SpecializationPoint& pt, bool q_one = false) {
    if (r > kMaxQ) throw std::invalid_argument("r exceeds the number of parameter slots");
    AKParams<Fp> p;
    p.n = n;
    p.r = r;
    p.one = Fp{1, pt.p};
    p.q = q_one ? p.one : pt[var_q()];
    p.qinv = q_one ? p.one : Fp{pt.inverse[var_q()], pt.p};
    for (int k = 0; k < r; ++k) {
        p.Q.push_back(pt[var_Q(k)]);
        p.Qinv.push_back(Fp{pt.inverse[var_Q(k)], pt.p});
    }
    return p;
}

// Sparse combination of basis indices.
template <class S>
class AKElement {
public:
    using Term = std::pair<std::uint32_t, S>;
    AKElement() = default;
    explicit AKElement(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coeff(std::uint32_t idx) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                                   [](const Term& t, std::uint32_t i) { return t.first < i; });
        if (it != terms_.end() && it->first == idx) return it->second;
        return S{};
    }

    friend bool operator==(const AKElement& a, const AKElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const AKElement& a, const AKElement& b) { return !(a == b); }

    friend AKElement operator+(const AKElement& a, const AKElement& b) { return combine(a, b, false); }
    friend AKElement operator-(const AKElement& a, const AKElement& b) { return combine(a, b, true); }
    AKElement operator-() const {
        AKElement r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    AKElement& operator+=(const AKElement& b) { return *this = *this + b; }
    AKElement& operator-=(const AKElement& b) { return *this = *this - b; }

    friend AKElement operator*(const S& c, const AKElement& a) {
        std::vector<Term> out;
        out.reserve(a.terms_.size());
        for (const auto& [i, x] : a.terms_) {
            S y = c * x;
            if (!y.is_zero()) out.push_back({i, std::move(y)});
        }
        return AKElement(std::move(out));
    }

private:
    std::vector<Term> terms_;

    static AKElement combine(const AKElement& a, const AKElement& b, bool subtract) {
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.push_back({b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second});
                ++j;
            } else {
                S c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) out.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return AKElement(std::move(out));
    }
};

// Dense scratch space for building sparse elements.
template <class S>
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : v_(dim), used_(dim, false) {}
    void add(std::uint32_t i, const S& c) {
        if (c.is_zero()) return;
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            v_[i] = c;
        } else {
            v_[i] += c;
        }
    }
    void add_scaled(const AKElement<S>& e, const S& c) {
        for (const auto& [i, x] : e.terms()) add(i, c * x);
    }
    void add(const AKElement<S>& e) {
        for (const auto& [i, x] : e.terms()) add(i, x);
    }
    AKElement<S> take() {
        std::sort(touched_.begin(), touched_.end());
        std::vector<typename AKElement<S>::Term> out;
        out.reserve(touched_.size());
        for (auto i : touched_) {
            if (!v_[i].is_zero()) out.push_back({i, std::move(v_[i])});
            v_[i] = S{};
            used_[i] = false;
        }
        touched_.clear();
        return AKElement<S>(std::move(out));
    }

private:
    std::vector<S> v_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> touched_;
};

template <class S>
class AKAlgebra {
public:
    using Element = AKElement<S>;

    explicit AKAlgebra(AKParams<S> params) : P_(std::move(params)), n_(P_.n), r_(P_.r) {
        if (n_ < 1 || r_ < 1) throw std::invalid_argument("AKAlgebra: need n >= 1 and r >= 1");
        if (static_cast<int>(P_.Q.size()) != r_) throw std::invalid_argument("AKAlgebra: need r parameters Q_k");
        rpow_ = 1;
        for (int i = 0; i < n_; ++i) rpow_ *= static_cast<std::uint32_t>(r_);
        perms_ = all_permutations(n_);
        for (std::size_t w = 0; w < perms_.size(); ++w) perm_index_[perms_[w].images()] = static_cast<int>(w);
        words_.resize(perms_.size());
        inverse_perm_.resize(perms_.size());
        for (std::size_t w = 0; w < perms_.size(); ++w) {
            words_[w] = perms_[w].reduced_word();
            inverse_perm_[w] = perm_index(perms_[w].inverse());
        }
        left_simple_.assign(static_cast<std::size_t>(n_), std::vector<int>(perms_.size(), 0));
        left_ascent_.assign(static_cast<std::size_t>(n_), std::vector<bool>(perms_.size(), false));
        for (int i = 1; i < n_; ++i)
            for (std::size_t w = 0; w < perms_.size(); ++w) {
                Permutation sw = Permutation::simple(n_, i) * perms_[w];
                left_simple_[i][w] = perm_index(sw);
                left_ascent_[i][w] = sw.length() > perms_[w].length();
            }
        // prod_p (x - Q_p) = sum_d e[d] x^d, so L_1^r = -sum_{d<r} e[d] L_1^d.
        std::vector<S> e{P_.one};
        for (int p = 0; p < r_; ++p) {
            std::vector<S> next(e.size() + 1);
            for (std::size_t d = 0; d < e.size(); ++d) {
                next[d + 1] += e[d];
                next[d] -= P_.Q[p] * e[d];
            }
            e = std::move(next);
        }
        cyclotomic_ = e;
        gen_cache_.resize(static_cast<std::size_t>(n_));
        for (auto& row : gen_cache_) row.resize(dim());
        L_cache_.resize(static_cast<std::size_t>(n_) + 1);
        for (auto& row : L_cache_) row.resize(dim());
    }

    AKAlgebra(const AKAlgebra&) = delete;
    AKAlgebra& operator=(const AKAlgebra&) = delete;

    const AKParams<S>& params() const { return P_; }
    int n() const { return n_; }
    int r() const { return r_; }
    std::uint32_t dim() const { return rpow_ * static_cast<std::uint32_t>(perms_.size()); }
    const std::vector<Permutation>& permutations() const { return perms_; }
    int perm_index(const Permutation& w) const { return perm_index_.at(w.images()); }
    const std::vector<int>& reduced_word(int w) const { return words_[w]; }

    // Index of L_1^{k_1} ... L_n^{k_n} T_w.
    std::uint32_t index(const std::vector<int>& k, int w) const {
        std::uint32_t code = 0;
        for (int i = n_ - 1; i >= 0; --i) code = code * static_cast<std::uint32_t>(r_) + static_cast<std::uint32_t>(k[i]);
        return static_cast<std::uint32_t>(w) * rpow_ + code;
    }
    std::vector<int> exponents(std::uint32_t idx) const {
        std::uint32_t code = idx % rpow_;
        std::vector<int> k(n_);
        for (int i = 0; i < n_; ++i) {
            k[i] = static_cast<int>(code % static_cast<std::uint32_t>(r_));
            code /= static_cast<std::uint32_t>(r_);
        }
        return k;
    }
    int perm_of(std::uint32_t idx) const { return static_cast<int>(idx / rpow_); }

    std::string basis_name(std::uint32_t idx) const {
        auto k = exponents(idx);
        std::string s;
        for (int i = 0; i < n_; ++i)
            if (k[i]) s += "L" + std::to_string(i + 1) + (k[i] > 1 ? "^" + std::to_string(k[i]) : "") + " ";
        int w = perm_of(idx);
        if (w != 0 || s.empty()) s += "T" + perms_[w].to_string();
        return s;
    }

    // ---- elements ----
    Element basis(std::uint32_t idx) const { return Element({{idx, P_.one}}); }
    Element zero() const { return {}; }
    Element one() const { return basis(index(std::vector<int>(n_, 0), 0)); }
    Element scalar(const S& c) const { return c * one(); }

    Element T(int i) const {
        check_gen(i);
        return leftmul_gen(i, one());
    }
    Element Tw(const Permutation& w) const { return basis(index(std::vector<int>(n_, 0), perm_index(w))); }
    Element L(int j) const { return leftmul_L(j, one()); }

    Element T_inv(int i) const {
        check_gen(i);
        if (i > 0) return T(i) - scalar(P_.delta());
        // T_0 (sum_{d>=1} e[d] T_0^{d-1}) = -e[0], and e[0] = prod_p (-Q_p).
        S inv_e0 = P_.one;
        for (int p = 0; p < r_; ++p) inv_e0 = inv_e0 * (-P_.Qinv[p]);
        Element acc, pw = one();
        for (int d = 1; d <= r_; ++d) {
            acc += cyclotomic_[d] * pw;
            pw = leftmul_gen(0, pw);
        }
        return (-inv_e0) * acc;
    }

    // T_{i} T_{i+1} ... T_{j}; 1 when j = i - 1.
    Element TT(int i, int j) const {
        if (j == i - 1) return one();
        if (i < 1 || j > n_ - 1 || i > j) throw std::out_of_range("TT: index out of range");
        Element e = one();
        for (int t = j; t >= i; --t) e = leftmul_gen(t, e);
        return e;
    }
    // T_{j} T_{j-1} ... T_{i}; 1 when j = i - 1.
    Element TTt(int j, int i) const {
        if (j == i - 1) return one();
        if (i < 1 || j > n_ - 1 || i > j) throw std::out_of_range("TTt: index out of range");
        Element e = one();
        for (int t = i; t <= j; ++t) e = leftmul_gen(t, e);
        return e;
    }
    // (T_i ... T_j)^{-1} = T_j^{-1} ... T_i^{-1}; 1 when j = i - 1.
    Element TT_inv(int i, int j) const {
        Element e = one();
        for (int t = j; t >= i; --t) e = multiply(e, T_inv(t));
        return e;
    }
    // (T_j ... T_i)^{-1} = T_i^{-1} ... T_j^{-1}
    Element TTt_inv(int j, int i) const {
        Element e = one();
        for (int t = i; t <= j; ++t) e = multiply(e, T_inv(t));
        return e;
    }

    Element L_inv(int j) const {
        check_L(j);
        Element e = T_inv(0);
        for (int t = 1; t < j; ++t) e = multiply(multiply(T_inv(t), e), T_inv(t));
        return e;
    }

    // L_j^{<k>} = T~_{j-1,1} (T_0 - Q_0)...(T_0 - Q_{k-1}) T_{1,j-1}
    Element L_bracket(int j, int k) const {
        check_L(j);
        if (k < 1 || k > r_) throw std::out_of_range("L_bracket: need 1 <= k <= r");
        Element core = one();
        for (int p = 0; p < k; ++p) core = leftmul_gen(0, core) - P_.Q[p] * core;
        return multiply(multiply(TTt(j - 1, 1), core), TT(1, j - 1));
    }

    Element L_power(int j, int e) const {
        Element out = one();
        if (e >= 0) {
            for (int t = 0; t < e; ++t) out = leftmul_L(j, out);
        } else {
            Element li = L_inv(j);
            for (int t = 0; t < -e; ++t) out = multiply(li, out);
        }
        return out;
    }

    Element x_mu(const Composition& flat) const {
        if (composition_size(flat) != n_) throw std::invalid_argument("x_mu: composition of the wrong size");
        CosetData cd(flat);
        Accumulator<S> acc(dim());
        for (const auto& w : cd.parabolic()) acc.add(index(std::vector<int>(n_, 0), perm_index(w)), P_.qpow(w.length()));
        return acc.take();
    }

    Element m_mu(const MultiComposition& mu) const {
        if (mu.r() != r_ || mu.n() != n_) throw std::invalid_argument("m_mu: shape mismatch");
        Profile pr = profile(mu);
        Element right = one();
        for (int k = 1; k <= r_ - 1; ++k)
            for (int i = 1; i <= pr.a[k]; ++i) right = multiply(right, L(i) - scalar(P_.Q[k]));
        return multiply(x_mu(mu.flat()), right);
    }

    // ---- multiplication ----
    Element leftmul_gen(int g, const Element& v) const {
        check_gen(g);
        if (v.size() == 1) return v.terms()[0].second * gen_basis(g, v.terms()[0].first);
        Accumulator<S> acc(dim());
        for (const auto& [b, c] : v.terms()) acc.add_scaled(gen_basis(g, b), c);
        return acc.take();
    }

    Element leftmul_L(int j, const Element& v) const {
        check_L(j);
        Accumulator<S> acc(dim());
        for (const auto& [b, c] : v.terms()) acc.add_scaled(L_basis(j, b), c);
        return acc.take();
    }

    // L_j times a basis element by the generator word T_{j-1}..T_1 T_0 T_1..T_{j-1},
    // bypassing the commuting shortcut used by leftmul_L.
    Element leftmul_L_by_word(int j, const Element& v) const {
        Element z = v;
        for (int t = j - 1; t >= 1; --t) z = leftmul_gen(t, z);
        z = leftmul_gen(0, z);
        for (int t = 1; t <= j - 1; ++t) z = leftmul_gen(t, z);
        return z;
    }

    // (basis monomial idx) * y, expanding idx as L_1^{k_1}...L_n^{k_n} T_w.
    Element monomial_times(std::uint32_t idx, const Element& y) const {
        Element z = y;
        const auto& word = words_[perm_of(idx)];
        for (auto it = word.rbegin(); it != word.rend(); ++it) z = leftmul_gen(*it, z);
        auto k = exponents(idx);
        for (int j = n_; j >= 1; --j)
            for (int t = 0; t < k[j - 1]; ++t) z = leftmul_L(j, z);
        return z;
    }

    Element multiply(const Element& x, const Element& y) const {
        if (x.is_zero() || y.is_zero()) return {};
        if (x.size() == 1) return x.terms()[0].second * monomial_times(x.terms()[0].first, y);
        Accumulator<S> acc(dim());
        for (const auto& [a, c] : x.terms()) acc.add_scaled(monomial_times(a, y), c);
        return acc.take();
    }

    Element multiply(std::initializer_list<Element> factors) const {
        Element out = one();
        for (const auto& f : factors) out = multiply(out, f);
        return out;
    }

    // Anti-automorphism fixing every T_i: L^k T_w -> T_{w^{-1}} L^k.
    Element op(const Element& x) const {
        Accumulator<S> acc(dim());
        for (const auto& [a, c] : x.terms()) {
            auto k = exponents(a);
            Element lk = basis(index(k, 0));
            Element tw = basis(index(std::vector<int>(n_, 0), inverse_perm_[perm_of(a)]));
            acc.add_scaled(multiply(tw, lk), c);
        }
        return acc.take();
    }

    // Sum of L^k T_w * c over all indices; convenience for the second basis check.
    Element Tw_times_Lk(int w, const std::vector<int>& k) const {
        return multiply(basis(index(std::vector<int>(n_, 0), w)), basis(index(k, 0)));
    }

private:
    AKParams<S> P_;
    int n_, r_;
    std::uint32_t rpow_ = 1;
    std::vector<Permutation> perms_;
    std::map<std::vector<int>, int> perm_index_;
    std::vector<std::vector<int>> words_;
    std::vector<int> inverse_perm_;
    std::vector<std::vector<int>> left_simple_;
    std::vector<std::vector<bool>> left_ascent_;
    std::vector<S> cyclotomic_;

    // Memo of generator (and L_j) times basis monomial; concurrent reads, locked inserts.
    mutable std::shared_mutex cache_mutex_;
    mutable std::vector<std::vector<std::unique_ptr<Element>>> gen_cache_;
    mutable std::vector<std::vector<std::unique_ptr<Element>>> L_cache_;

    void check_gen(int g) const {
        if (g < 0 || g >= n_) throw std::out_of_range("generator index out of range");
    }
    void check_L(int j) const {
        if (j < 1 || j > n_) throw std::out_of_range("L index out of range");
    }

    const Element& cached(std::vector<std::vector<std::unique_ptr<Element>>>& table, int g, std::uint32_t b,
                          Element (AKAlgebra::*compute)(int, std::uint32_t) const) const {
        {
            std::shared_lock lock(cache_mutex_);
            if (table[g][b]) return *table[g][b];
        }
        Element e = (this->*compute)(g, b);
        std::unique_lock lock(cache_mutex_);
        if (!table[g][b]) table[g][b] = std::make_unique<Element>(std::move(e));
        return *table[g][b];
    }

    const Element& gen_basis(int g, std::uint32_t b) const { return cached(gen_cache_, g, b, &AKAlgebra::compute_gen); }
    const Element& L_basis(int j, std::uint32_t b) const { return cached(L_cache_, j, b, &AKAlgebra::compute_L); }

    Element compute_gen(int g, std::uint32_t b) const {
        auto k = exponents(b);
        int w = perm_of(b);
        Accumulator<S> acc(dim());
        if (g == 0) {
            if (k[0] + 1 < r_) {
                k[0] += 1;
                acc.add(index(k, w), P_.one);
            } else {
                for (int d = 0; d < r_; ++d) {
                    k[0] = d;
                    acc.add(index(k, w), -cyclotomic_[d]);
                }
            }
            return acc.take();
        }
        const int i = g;
        const S delta = P_.delta();
        int a = k[i - 1], c = k[i];
        // exchanged monomial times T_i T_w
        std::vector<int> ks = k;
        std::swap(ks[i - 1], ks[i]);
        int sw = left_simple_[i][w];
        acc.add(index(ks, sw), P_.one);
        if (!left_ascent_[i][w]) acc.add(index(ks, w), delta);
        // correction terms times T_w
        if (a > c) {
            for (int s = 0; s < a - c; ++s) {
                std::vector<int> kc = k;
                kc[i - 1] = a - 1 - s;
                kc[i] = c + 1 + s;
                acc.add(index(kc, w), -delta);
            }
        } else if (a < c) {
            for (int s = 0; s < c - a; ++s) {
                std::vector<int> kc = k;
                kc[i - 1] = c - 1 - s;
                kc[i] = a + 1 + s;
                acc.add(index(kc, w), delta);
            }
        }
        return acc.take();
    }

    Element compute_L(int j, std::uint32_t b) const {
        auto k = exponents(b);
        if (k[j - 1] + 1 < r_) {  // L's commute, so L_j only raises its own exponent
            k[j - 1] += 1;
            return basis(index(k, perm_of(b)));
        }
        return leftmul_L_by_word(j, basis(b));
    }
};

// Coordinates of an exact element at a specialization.
inline AKElement<Fp> specialize(const AKElement<ParamPoly>& x, const SpecializationPoint& pt) {
    std::vector<AKElement<Fp>::Term> out;
    for (const auto& [i, c] : x.terms()) {
        Fp v = c.specialize(pt);
        if (!v.is_zero()) out.push_back({i, v});
    }
    return AKElement<Fp>(std::move(out));
}

inline std::vector<std::uint64_t> dense(const AKElement<Fp>& x, std::uint32_t dim) {
    std::vector<std::uint64_t> v(dim, 0);
    for (const auto& [i, c] : x.terms()) v[i] = c.v;
    return v;
}

}  // namespace akschur
