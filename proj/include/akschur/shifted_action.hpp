#pragma once

// Generator actions of the shifted quantum affine algebra on the cyclic generators v_mu of
// the weight blocks, together with the cyclotomic q-Schur operators SE_i, SF_i and the
// bracket elements [K_i; c, t].
//
// An action is recorded as the image of v_mu only: v_mu -> v_target * Z / den.  Every other
// basis vector v_mu * h goes to v_target * Z * h / den, which is well defined exactly when
// v_target * Z kills the relation ideal of v_mu.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ariki_koike.hpp"
#include "combinatorics.hpp"
#include "param_poly.hpp"

namespace akschur {

enum class Gen { E0, F0, F1, PsiPlus, PsiMinus, H1, Hm1 };

inline const std::vector<Gen>& all_gens() {
    static const std::vector<Gen> g{Gen::E0, Gen::F0, Gen::F1, Gen::PsiPlus, Gen::PsiMinus, Gen::H1, Gen::Hm1};
    return g;
}

inline std::string gen_name(Gen g, int i) {
    std::string s = std::to_string(i);
    switch (g) {
        case Gen::E0: return "e_{" + s + ",0}";
        case Gen::F0: return "f_{" + s + ",0}";
        case Gen::F1: return "f_{" + s + ",1}";
        case Gen::PsiPlus: return "psi+_{" + s + ",-b}";
        case Gen::PsiMinus: return "psi-_{" + s + ",0}";
        case Gen::H1: return "h_{" + s + ",1}";
        case Gen::Hm1: return "h_{" + s + ",-1}";
    }
    return "?";
}

// b_i = 1 exactly when flat index i is the last slot of a block (i <= m-1); b[0] is b_1.
inline std::vector<int> shift_vector(const std::vector<int>& m_parts) {
    int m = 0;
    for (int x : m_parts) m += x;
    std::vector<int> b(static_cast<std::size_t>(std::max(m - 1, 0)), 0);
    int s = 0;
    for (std::size_t k = 0; k + 1 < m_parts.size(); ++k) {
        s += m_parts[k];
        b[static_cast<std::size_t>(s - 1)] = 1;
    }
    return b;
}

inline Composition shift_weight(const Composition& mu, int i, int sign) {
    Composition out = mu;
    out[i - 1] += sign;
    out[i] -= sign;
    return out;
}

template <class S>
struct GenImage {
    std::optional<Composition> target;  // flat weight of the target block; nullopt = zero map
    AKElement<S> Z;
    S den;
};

template <class S>
class ShiftedAction {
public:
    using Element = AKElement<S>;

    // twisted: the action on the quotient blocks (with boundary twist factors and scalar
    // shifts); untwisted: the unshifted action on the x_mu blocks.
    ShiftedAction(const AKAlgebra<S>& A, std::vector<int> m_parts) : A_(A), m_parts_(std::move(m_parts)) {}

    const AKAlgebra<S>& algebra() const { return A_; }
    const std::vector<int>& m_parts() const { return m_parts_; }
    int m() const {
        int s = 0;
        for (int x : m_parts_) s += x;
        return s;
    }

    // 1 + sum_{p=1}^{M-1} q^p T_{N+1} ... T_{N+p}
    Element sum_up(int N, int M) const {
        Element acc = A_.one();
        for (int p = 1; p <= M - 1; ++p) acc += P().qpow(p) * A_.TT(N + 1, N + p);
        return acc;
    }
    // 1 + sum_{p=1}^{M-1} q^p T_{N-1} ... T_{N-p}
    Element sum_down(int N, int M) const {
        Element acc = A_.one();
        for (int p = 1; p <= M - 1; ++p) acc += P().qpow(p) * A_.TTt(N - 1, N - p);
        return acc;
    }
    // sum_{p=1}^{count} L_{start+p}^{+-1}
    Element L_sum(int start, int count, bool inverse) const {
        Element acc;
        for (int p = 1; p <= count; ++p) acc += inverse ? A_.L_inv(start + p) : A_.L(start + p);
        return acc;
    }

    GenImage<S> image(Gen g, int i, const MultiComposition& mu, bool twisted) const {
        const auto& f = mu.flat();
        Profile pr = profile(mu);
        const int Ni = pr.N[i], Nim1 = pr.N[i - 1];
        const int mi = f[i - 1], mi1 = f[i];
        const int d = mi - mi1;
        auto bd = twisted ? mu.boundary(i) : std::nullopt;
        const S one = P().one;
        GenImage<S> out{f, {}, one};
        switch (g) {
            case Gen::E0:
                if (mi1 == 0) return {std::nullopt, {}, one};
                out.target = shift_weight(f, i, +1);
                out.Z = P().qpow(-mi1 + 1) * sum_up(Ni, mi1);
                return out;
            case Gen::F0:
                if (mi == 0) return {std::nullopt, {}, one};
                out.target = shift_weight(f, i, -1);
                out.Z = P().qpow(-mi + 1) * sum_down(Ni, mi);
                if (bd) {
                    const int k = *bd;
                    out.Z = (-P().Qinv[k]) * A_.multiply(A_.L(Ni) - A_.scalar(P().Q[k]), out.Z);
                }
                return out;
            case Gen::F1:
                if (twisted) return f1_by_commutator(i, mu, true);
                if (mi == 0) return {std::nullopt, {}, one};
                out.target = shift_weight(f, i, -1);
                out.Z = P().qpow(i - mi + 1) * A_.multiply(A_.L(Ni), sum_down(Ni, mi));
                return out;
            case Gen::PsiPlus: {
                S c = P().qpow(d);
                if (bd) c = c * (-P().qpow(-i) * P().Qinv[*bd]);
                out.Z = A_.scalar(c);
                return out;
            }
            case Gen::PsiMinus:
                out.Z = A_.scalar(P().qpow(-d));
                return out;
            case Gen::H1:
            case Gen::Hm1: {
                const bool inv = g == Gen::Hm1;
                const int s = inv ? -1 : 1;
                Element body = P().qpow(s * (i - 1)) * L_sum(Nim1, mi, inv) - P().qpow(s * (i + 1)) * L_sum(Ni, mi1, inv);
                if (!twisted) {
                    out.Z = body;
                    return out;
                }
                // (q - q^{-1}) times the action, so the scalar shift stays polynomial
                out.den = P().delta();
                out.Z = P().delta() * body;
                if (bd) {
                    const int k = *bd;
                    S shift = inv ? P().qpow(-i) * P().Qinv[k] : -(P().qpow(i) * P().Q[k]);
                    out.Z += A_.scalar(shift);
                }
                return out;
            }
        }
        throw std::logic_error("unknown generator");
    }

    // f_{i,1} = -(1/[2]) [h_{i,1}, f_{i,0}] evaluated on v_mu.
    GenImage<S> f1_by_commutator(int i, const MultiComposition& mu, bool twisted) const {
        GenImage<S> f0 = image(Gen::F0, i, mu, twisted);
        const S one = P().one;
        if (!f0.target) return {std::nullopt, {}, one};
        MultiComposition lam(m_parts_, *f0.target);
        GenImage<S> h_mu = image(Gen::H1, i, mu, twisted);
        GenImage<S> h_lam = image(Gen::H1, i, lam, twisted);
        // both h images share the same denominator
        Element num = A_.multiply(h_lam.Z, f0.Z) - A_.multiply(f0.Z, h_mu.Z);
        return {f0.target, -num, (P().q + P().qinv) * h_mu.den};
    }

    // Element of H representing the image: generator(target) * Z (the division by den is
    // left to the caller).
    Element image_numerator(const GenImage<S>& img, bool quotient_generator) const {
        if (!img.target) return {};
        MultiComposition t(m_parts_, *img.target);
        Element g = quotient_generator ? A_.m_mu(t) : A_.x_mu(t.flat());
        return A_.multiply(g, img.Z);
    }

    // Generators of the relation ideal of v_mu: T_i - q for s_i in S_mu, and (quotient only)
    // L_j^{<c_j>}.
    std::vector<Element> relation_generators(const MultiComposition& mu, bool quotient) const {
        std::vector<Element> gens;
        const CosetData cd(mu.flat());
        for (int s : cd.generators()) gens.push_back(A_.T(s) - A_.scalar(P().q));
        if (quotient) {
            Profile pr = profile(mu);
            for (int j = 1; j <= A_.n(); ++j) gens.push_back(A_.L_bracket(j, pr.c[j]));
        }
        return gens;
    }

private:
    const AKAlgebra<S>& A_;
    std::vector<int> m_parts_;
    const AKParams<S>& P() const { return A_.params(); }
};

// SE_i and SF_i on m_mu, with the sums expanded in nested form
// 1 + q T_{a}(1 + q T_{a+1}(1 + ...)).
template <class S>
GenImage<S> schur_operator_image(const AKAlgebra<S>& A, bool is_E, int i, const MultiComposition& mu) {
    const auto& P = A.params();
    const auto& f = mu.flat();
    Profile pr = profile(mu);
    const int Ni = pr.N[i];
    const int len = is_E ? f[i] : f[i - 1];
    if (len == 0) return {std::nullopt, {}, P.one};
    AKElement<S> nest = A.one();
    for (int p = len - 1; p >= 1; --p) {
        int letter = is_E ? Ni + p : Ni - p;
        nest = A.one() + P.q * A.multiply(A.T(letter), nest);
    }
    AKElement<S> Z = P.qpow(-len + 1) * nest;
    if (!is_E) {
        if (auto k = mu.boundary(i)) Z = A.multiply((-P.Qinv[*k]) * (A.L(Ni) - A.scalar(P.Q[*k])), Z);
    }
    return {shift_weight(f, i, is_E ? +1 : -1), Z, P.one};
}

// [K_i; c, t] on a block with d = mu_i - mu_{i+1}: prod_{s=1}^t [d + c - s + 1] / [s].
inline ParamPoly k_bracket_value(int d, int c, int t) {
    if (t < 0) throw std::invalid_argument("k_bracket: t must be nonnegative");
    ParamPoly num(1), den(1);
    for (int s = 1; s <= t; ++s) {
        num *= qint(d + c - s + 1);
        den *= qint(s);
    }
    auto quo = num.divide_exact(den);
    if (!quo) throw std::logic_error("k_bracket: quotient is not a Laurent polynomial");
    return *quo;
}

// Scalar by which K^lambda acts on the block mu.
inline ParamPoly k_lambda_value(const Composition& lambda, const Composition& mu, int n) {
    ParamPoly v(1);
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
        const int d = mu[i] - mu[i + 1];
        v *= k_bracket_value(d, lambda[i] + lambda[i + 1] + 2 * n, 2 * lambda[i] + 2 * n);
        v *= k_bracket_value(d, lambda[i + 1] - lambda[i] - 1, 2 * n * lambda[i + 1]);
        if (v.is_zero()) break;
    }
    return v;
}

}  // namespace akschur
