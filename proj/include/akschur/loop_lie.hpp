#pragma once

// Loop algebra L sl_m with coefficients in ParamPoly, the shift map iota from the shifted
// loop Lie algebra, the elements cE_{(i,j),t}, and the formal generator translation
// Phi / Psi between the H / K and psi presentations.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "param_poly.hpp"

namespace akschur {

// sum of c * E_{ij} x^t, 1 <= i, j <= m
class LoopElement {
public:
    using Key = std::tuple<int, int, int>;  // (i, j, t)

    LoopElement() = default;

    static LoopElement unit(int i, int j, int t, const ParamPoly& c = ParamPoly(1)) {
        LoopElement e;
        e.add(i, j, t, c);
        return e;
    }

    void add(int i, int j, int t, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{i, j, t}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Key, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ParamPoly coeff(int i, int j, int t) const {
        auto it = terms_.find(Key{i, j, t});
        return it == terms_.end() ? ParamPoly() : it->second;
    }

    // every degree slice has trace zero
    bool trace_free() const {
        std::map<int, ParamPoly> tr;
        for (const auto& [k, c] : terms_)
            if (std::get<0>(k) == std::get<1>(k)) tr[std::get<2>(k)] += c;
        for (const auto& [t, c] : tr)
            if (!c.is_zero()) return false;
        return true;
    }

    std::pair<int, int> degree_window() const {
        if (terms_.empty()) return {0, -1};
        int lo = std::get<2>(terms_.begin()->first), hi = lo;
        for (const auto& [k, c] : terms_) {
            lo = std::min(lo, std::get<2>(k));
            hi = std::max(hi, std::get<2>(k));
        }
        return {lo, hi};
    }

    LoopElement& operator+=(const LoopElement& o) {
        for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
        return *this;
    }
    LoopElement& operator-=(const LoopElement& o) {
        for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
        return *this;
    }
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
    friend LoopElement operator*(const ParamPoly& s, const LoopElement& a) {
        LoopElement out;
        for (const auto& [k, c] : a.terms_) out.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), s * c);
        return out;
    }
    friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")E" + std::to_string(std::get<0>(k)) + std::to_string(std::get<1>(k)) +
                 "x^" + std::to_string(std::get<2>(k));
        }
        return s;
    }

private:
    std::map<Key, ParamPoly> terms_;
};

// [E_ab x^s, E_cd x^t] = delta_bc E_ad x^{s+t} - delta_da E_cb x^{s+t}
inline LoopElement bracket(const LoopElement& x, const LoopElement& y) {
    LoopElement out;
    for (const auto& [kx, cx] : x.terms()) {
        auto [a, b, s] = kx;
        for (const auto& [ky, cy] : y.terms()) {
            auto [c, d, t] = ky;
            if (b == c) out.add(a, d, s + t, cx * cy);
            if (d == a) out.add(c, b, s + t, -(cx * cy));
        }
    }
    return out;
}

// Generators of L sl_m.
inline LoopElement loop_E(int i, int t) { return LoopElement::unit(i, i + 1, t); }
inline LoopElement loop_F(int i, int t) { return LoopElement::unit(i + 1, i, t); }
inline LoopElement loop_H(int i, int t) {
    LoopElement h = LoopElement::unit(i, i, t);
    h.add(i + 1, i + 1, t, ParamPoly(-1));
    return h;
}

// (-eta_i^{-1})^e
inline ParamPoly neg_eta_inv_pow(int i, int e) {
    ParamPoly base = -eta(i).unit_inverse();
    return base.pow(e);
}

enum class LieGen { E, F, H };

// Shifted loop Lie algebra g_{eta,[b]} realized through iota inside L sl_m.
class ShiftedLoop {
public:
    ShiftedLoop(int m, std::vector<int> b) : m_(m), b_(std::move(b)) {
        if (m < 2) throw std::invalid_argument("ShiftedLoop: m must be at least 2");
        if (static_cast<int>(b_.size()) != m - 1) throw std::invalid_argument("ShiftedLoop: b must have m-1 entries");
        if (m - 1 > kMaxEta) throw std::invalid_argument("ShiftedLoop: too many eta variables");
        for (int x : b_)
            if (x < 0) throw std::invalid_argument("ShiftedLoop: negative shift");
    }

    int m() const { return m_; }
    const std::vector<int>& b() const { return b_; }
    int b(int i) const { return b_[static_cast<std::size_t>(i - 1)]; }

    // coefficient (-eta_i^{-1})^{b_i} of the shifted term, zero when b_i = 0
    ParamPoly shift_coeff(int i) const { return b(i) > 0 ? neg_eta_inv_pow(i, b(i)) : ParamPoly(); }

    LoopElement iota(LieGen g, int i, int t) const {
        switch (g) {
            case LieGen::E: return loop_E(i, t);
            case LieGen::H: return loop_H(i, t);
            case LieGen::F: {
                LoopElement f = loop_F(i, t);
                if (b(i) > 0) f += shift_coeff(i) * loop_F(i, t + b(i));
                return f;
            }
        }
        throw std::logic_error("unknown Lie generator");
    }

    // cE^{[b]}_{(i,j),t} mapped by iota; i = j requires i <= m-1
    LoopElement iota_cE(int i, int j, int t) const { return cE(i, j, t, true); }

    // cE^{[0]}_{(i,j),t} in L sl_m
    LoopElement cE0(int i, int j, int t) const { return cE(i, j, t, false); }

private:
    int m_;
    std::vector<int> b_;

    LoopElement cE(int i, int j, int t, bool shifted) const {
        auto gen = [&](LieGen g, int k, int s) {
            if (!shifted && g == LieGen::F) return loop_F(k, s);
            return iota(g, k, s);
        };
        if (i == j) return gen(LieGen::H, i, t);
        if (i < j) {
            LoopElement acc = gen(LieGen::E, j - 1, t);
            for (int k = j - 2; k >= i; --k) acc = bracket(gen(LieGen::E, k, 0), acc);
            return acc;
        }
        LoopElement acc = gen(LieGen::F, j, t);
        for (int k = j + 1; k <= i - 1; ++k) acc = bracket(gen(LieGen::F, k, 0), acc);
        return acc;
    }
};

inline int cartan(int i, int j) {
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) return -1;
    return 0;
}

// zeta_b(t): |t| = zeta * b + rest with 0 <= rest < b; 0 when b = 0
inline int zeta(int b, int t) {
    if (b < 0) throw std::invalid_argument("zeta: negative shift");
    if (b == 0) return 0;
    return (t >= 0 ? t : -t) / b;
}

// Formal symbols of the two presentations of the Cartan part at one node.
enum class CartanSym { H, Kplus, Kminus, PsiPlus, PsiMinus };

// Linear combination of formal symbols; the variable x stands for q - q^{-1} and eta_1 for
// eta_i.
class FormalCombo {
public:
    using Key = std::pair<CartanSym, int>;

    static FormalCombo sym(CartanSym s, int t = 0, const ParamPoly& c = ParamPoly(1)) {
        FormalCombo f;
        f.add({s, t}, c);
        return f;
    }

    void add(const Key& k, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    FormalCombo& operator+=(const FormalCombo& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    friend FormalCombo operator+(FormalCombo a, const FormalCombo& b) { return a += b; }
    friend FormalCombo operator-(FormalCombo a, const FormalCombo& b) { return a += ParamPoly(-1) * b; }
    friend FormalCombo operator*(const ParamPoly& s, const FormalCombo& a) {
        FormalCombo out;
        for (const auto& [k, c] : a.terms_) out.add(k, s * c);
        return out;
    }
    friend bool operator==(const FormalCombo& a, const FormalCombo& b) { return a.terms_ == b.terms_; }

    const std::map<Key, ParamPoly>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    std::string to_string() const {
        static const char* names[] = {"H", "K+", "K-", "psi+", "psi-"};
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")" + names[static_cast<int>(k.first)];
            if (k.first != CartanSym::Kplus && k.first != CartanSym::Kminus) s += "_" + std::to_string(k.second);
        }
        return s;
    }

private:
    std::map<Key, ParamPoly> terms_;
};

// Phi (H, K in terms of psi) and Psi (psi in terms of H, K) for one node with shift b.
class CartanTranslation {
public:
    explicit CartanTranslation(int b) : b_(b) {
        if (b < 0) throw std::invalid_argument("CartanTranslation: negative shift");
    }

    int b() const { return b_; }
    static ParamPoly delta() { return ParamPoly::var(var_x()); }
    static ParamPoly e_pow(int k) { return neg_eta_inv_pow(1, k); }  // (-eta^{-1})^k

    FormalCombo phi_H(int t) const {
        const ParamPoly dinv = ParamPoly::var(var_x(), -1);
        FormalCombo out;
        const int z = zeta(b_, t);
        if (t > 0) {
            for (int k = 0; k <= z; ++k)
                out.add({CartanSym::PsiPlus, t - (k + 1) * b_}, sign(k) * e_pow(-(k + 1) * b_));
        } else if (t == 0) {
            out.add({CartanSym::PsiPlus, -b_}, e_pow(-b_));
            out.add({CartanSym::PsiMinus, 0}, ParamPoly(-1));
        } else {
            for (int k = 0; k <= z; ++k) out.add({CartanSym::PsiMinus, t + k * b_}, -(sign(k) * e_pow(k * b_)));
        }
        return dinv * out;
    }

    // K^+ = (psi^-_0)^{-1} = (-eta^{-1})^{-b} psi^+_{-b} in the quotient by psi^+_{-b} psi^-_0
    FormalCombo phi_K(bool plus) const {
        if (plus) return FormalCombo::sym(CartanSym::PsiPlus, -b_, e_pow(-b_));
        return FormalCombo::sym(CartanSym::PsiMinus, 0);
    }

    FormalCombo psi_plus(int t) const {
        if (t < -b_) throw std::out_of_range("psi+ index below -b");
        const ParamPoly d = delta();
        const bool shifted = b_ > 0;
        if (t == -b_) return FormalCombo::sym(CartanSym::Kplus, 0, e_pow(b_));
        if (t > 0) {
            FormalCombo out = FormalCombo::sym(CartanSym::H, t, d);
            if (shifted) out.add({CartanSym::H, t + b_}, d * e_pow(b_));
            return out;
        }
        if (t == 0) {
            FormalCombo out = FormalCombo::sym(CartanSym::Kplus);
            if (shifted) out.add({CartanSym::H, b_}, d * e_pow(b_));
            return out;
        }
        return FormalCombo::sym(CartanSym::H, t + b_, d * e_pow(b_));
    }

    FormalCombo psi_minus(int t) const {
        if (t > 0) throw std::out_of_range("psi- index above 0");
        const ParamPoly d = delta();
        const bool shifted = b_ > 0;
        if (t == 0) return FormalCombo::sym(CartanSym::Kminus);
        if (t > -b_) return FormalCombo::sym(CartanSym::H, t, -d);
        if (t == -b_) {
            FormalCombo out = FormalCombo::sym(CartanSym::Kminus, 0, e_pow(b_));
            out.add({CartanSym::H, -b_}, -d);
            return out;
        }
        FormalCombo out = FormalCombo::sym(CartanSym::H, t, -d);
        if (shifted) out.add({CartanSym::H, t + b_}, -(d * e_pow(b_)));
        return out;
    }

    // Apply Psi to a psi-combination and rewrite K^+ = K^- + (q - q^{-1}) H_0.
    FormalCombo apply_psi(const FormalCombo& f) const {
        FormalCombo out;
        for (const auto& [k, c] : f.terms()) {
            if (k.first == CartanSym::PsiPlus) out += c * psi_plus(k.second);
            else if (k.first == CartanSym::PsiMinus) out += c * psi_minus(k.second);
            else throw std::invalid_argument("apply_psi: expected psi symbols");
        }
        return canonical(out);
    }

    FormalCombo apply_phi(const FormalCombo& f) const {
        FormalCombo out;
        for (const auto& [k, c] : f.terms()) {
            switch (k.first) {
                case CartanSym::H: out += c * phi_H(k.second); break;
                case CartanSym::Kplus: out += c * phi_K(true); break;
                case CartanSym::Kminus: out += c * phi_K(false); break;
                default: throw std::invalid_argument("apply_phi: expected H / K symbols");
            }
        }
        return out;
    }

    static FormalCombo canonical(const FormalCombo& f) {
        FormalCombo out;
        for (const auto& [k, c] : f.terms()) {
            if (k.first == CartanSym::Kplus) {
                out.add({CartanSym::Kminus, 0}, c);
                out.add({CartanSym::H, 0}, c * delta());
            } else {
                out.add(k, c);
            }
        }
        return out;
    }

private:
    int b_;
    static ParamPoly sign(int k) { return ParamPoly(k % 2 ? -1 : 1); }
};

}  // namespace akschur
