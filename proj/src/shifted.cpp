// Shifted quantum affine generators on the weight blocks: commutation with the right
// action, the f_{i,1} routes, stability of the I-span, K^lambda, Schur generators and the
// double centralizer.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "akschur/modules.hpp"
#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"
#include "block_ops.hpp"

namespace akschur {

namespace {

std::string label(Gen g, int i, const MultiComposition& mu) {
    return gen_name(g, i) + " on " + mu.to_string();
}

int flat_m(const std::vector<int>& m_parts) {
    int m = 0;
    for (int x : m_parts) m += x;
    return m;
}

std::vector<PrimeMatrix> right_generators(const WeightSpace& W, const AKAlgebra<Fp>& A) {
    std::vector<PrimeMatrix> out;
    for (int g = 0; g < A.n(); ++g) out.push_back(W.right_action(A.T(g)));
    return out;
}

// W-coordinates of v (AK coordinates) lying in block b.
Vec to_space(const WeightSpace& W, std::size_t b, const Vec& v) {
    Vec out(W.dim(), 0);
    const auto c = W.block(b).coords(v);
    for (std::size_t k = 0; k < c.size(); ++k) out[W.offset(b) + k] = c[k];
    return out;
}

}  // namespace

std::optional<PrimeMatrix> operator_matrix(const WeightSpace& W, const ShiftedAction<Fp>& act, Gen g, int i,
                                           bool twisted) {
    const bool quotient = W.kind() == ModuleKind::quotient;
    const auto dim = act.algebra().dim();
    std::vector<WeightSpace::Image> images(W.num_blocks());
    for (std::size_t s = 0; s < W.num_blocks(); ++s) {
        const auto img = act.image(g, i, W.block(s).mu, twisted);
        if (!img.target) continue;
        auto t = W.find(*img.target);
        if (!t) continue;
        const auto num = act.image_numerator(img, quotient);
        images[s] = {t, dense(img.den.inv() * num, dim)};
    }
    return W.operator_from_images(images);
}

CommutationReport bimodule_commutation(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                       std::uint64_t seed, bool exact) {
    CommutationReport rep;
    const int m = flat_m(m_parts);
    const auto weights = enumerate_multicompositions(n, m_parts);
    if (exact) {
        AKAlgebra<ParamPoly> A(generic_params(n, r));
        ShiftedAction<ParamPoly> act(A, m_parts);
        for (const auto& mu : weights) {
            const auto rels = act.relation_generators(mu, true);
            for (int i = 1; i < m; ++i)
                for (Gen g : all_gens()) {
                    const auto img = act.image(g, i, mu, true);
                    if (!img.target) continue;
                    const auto num = act.image_numerator(img, true);
                    bool ok = true;
                    for (const auto& rho : rels)
                        if (!A.multiply(num, rho).is_zero()) ok = false;
                    rep.exact.record(ok, label(g, i, mu));
                }
        }
    }
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        RightRegular R(A);
        WeightSpace W(R, m_parts, ModuleKind::quotient);
        ShiftedAction<Fp> act(A, m_parts);
        const auto right = right_generators(W, A);
        for (int i = 1; i < m; ++i)
            for (Gen g : all_gens()) {
                auto X = operator_matrix(W, act, g, i, true);
                bool ok = X.has_value();
                if (ok)
                    for (const auto& Rg : right)
                        if (!commute(*X, Rg)) ok = false;
                rep.specialized.record(ok, gen_name(g, i));
            }
    }
    return rep;
}

Tally f1_routes(int n, int r, const std::vector<int>& m_parts) {
    Tally t;
    const int m = flat_m(m_parts);
    AKAlgebra<ParamPoly> A(generic_params(n, r));
    ShiftedAction<ParamPoly> act(A, m_parts);
    for (const auto& mu : enumerate_multicompositions(n, m_parts))
        for (int i = 1; i < m; ++i) {
            const auto direct = act.image(Gen::F1, i, mu, false);
            const auto comm = act.f1_by_commutator(i, mu, false);
            if (!direct.target && !comm.target) continue;
            bool ok = direct.target == comm.target;
            if (ok)
                ok = comm.den * act.image_numerator(direct, false) == direct.den * act.image_numerator(comm, false);
            t.record(ok, label(Gen::F1, i, mu));
        }
    return t;
}

Tally low_mode_relations(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed) {
    Tally t;
    const int m = flat_m(m_parts);
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        RightRegular R(A);
        WeightSpace W(R, m_parts, ModuleKind::quotient);
        ShiftedAction<Fp> act(A, m_parts);
        const auto& P = A.params();
        auto op = [&](Gen g, int i) {
            auto X = operator_matrix(W, act, g, i, true);
            if (!X) throw std::logic_error("generator image outside its target block");
            return *X;
        };
        std::vector<PrimeMatrix> E, F, Pp, Pm, H1, Hm1;
        for (int i = 1; i < m; ++i) {
            E.push_back(op(Gen::E0, i));
            F.push_back(op(Gen::F0, i));
            Pp.push_back(op(Gen::PsiPlus, i));
            Pm.push_back(op(Gen::PsiMinus, i));
            H1.push_back(op(Gen::H1, i));
            Hm1.push_back(op(Gen::Hm1, i));
        }
        const std::size_t D = W.dim();
        const std::uint64_t p = W.prime();
        auto scal = [&](const Fp& c, PrimeMatrix X) {
            for (std::size_t a = 0; a < D; ++a)
                for (std::size_t b = 0; b < D; ++b) X(a, b) = (c * Fp{X(a, b), p}).v;
            return X;
        };
        auto minus = [](const PrimeMatrix& X, const PrimeMatrix& Y) { return X - Y; };
        auto bracket = [&](const PrimeMatrix& X, const PrimeMatrix& Y) { return minus(X * Y, Y * X); };
        auto block_diagonal = [&](const PrimeMatrix& X) {
            for (std::size_t a = 0; a < W.num_blocks(); ++a)
                for (std::size_t b = 0; b < W.num_blocks(); ++b)
                    if (a != b && !(W.sub_block(X, a, b) == PrimeMatrix(W.block(a).dim(), W.block(b).dim(), p)))
                        return false;
            return true;
        };
        const PrimeMatrix zero(D, D, p);
        const Fp two = P.q + P.qinv;
        const auto shift = shift_vector(m_parts);
        for (int i = 1; i < m; ++i) {
            const auto ii = static_cast<std::size_t>(i - 1);
            const auto EF = bracket(E[ii], F[ii]);
            const std::string si = std::to_string(i);
            t.record(block_diagonal(EF), "[e" + si + ",f" + si + "] diagonal");
            if (!shift[ii]) {
                // b_i = 0: psi+_{i,0} is realized and (q - q^{-1})[e, f] = psi+ - psi- at mode 0
                t.record(scal(P.delta(), EF) == minus(Pp[ii], Pm[ii]), "[e,f] mode 0 at " + si);
            }
            for (int j = 1; j < m; ++j) {
                const auto jj = static_cast<std::size_t>(j - 1);
                const std::string sj = std::to_string(j);
                if (i != j) t.record(bracket(E[ii], F[jj]) == zero, "[e" + si + ",f" + sj + "]");
                t.record(bracket(H1[ii], H1[jj]) == zero, "[h" + si + ",1 h" + sj + ",1]");
                t.record(bracket(H1[ii], Hm1[jj]) == zero, "[h" + si + ",1 h" + sj + ",-1]");
                t.record(bracket(Pm[ii], H1[jj]) == zero, "[psi-" + si + " h" + sj + ",1]");
                if (std::abs(i - j) == 1) {
                    for (const auto* G : {&E, &F}) {
                        const auto& X = (*G)[ii];
                        const auto& Y = (*G)[jj];
                        auto serre = minus(X * X * Y + Y * X * X, scal(two, X * Y * X));
                        t.record(serre == zero, std::string(G == &E ? "serre e" : "serre f") + si + sj);
                    }
                }
            }
        }
    }
    return t;
}

StabilityReport stability(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed) {
    StabilityReport rep;
    const int m = flat_m(m_parts);
    if (r < 2) return rep;
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        RightRegular R(A);
        WeightSpace W(R, m_parts, ModuleKind::tilde);
        ShiftedAction<Fp> act(A, m_parts);
        SpanBuilder I(W.dim(), W.prime());
        for (std::size_t b = 0; b < W.num_blocks(); ++b) {
            const auto& mu = W.block(b).mu;
            Profile pr = profile(mu);
            const auto x = A.x_mu(mu.flat());
            std::vector<Vec> gens;
            for (int j = 1; j <= n; ++j) gens.push_back(dense(A.multiply(x, A.L_bracket(j, pr.c[j])), A.dim()));
            const auto span = right_closure(R, gens);
            const long long expect =
                expected_dim(mu, ModuleKind::tilde, r) - expected_dim(mu, ModuleKind::quotient, r);
            rep.span_dims.record(static_cast<long long>(span.rank()) == expect, "I-span of " + mu.to_string());
            for (const auto& row : span.rows()) I.add(to_space(W, b, row));
        }
        auto keeps = [&](const PrimeMatrix& X) {
            for (const auto& row : I.rows())
                if (!I.contains(X.apply(row))) return false;
            return true;
        };
        for (int i = 1; i < m; ++i) {
            for (Gen g : all_gens()) {
                auto X = operator_matrix(W, act, g, i, true);
                rep.twisted_stable.record(X && keeps(*X), gen_name(g, i));
            }
            for (Gen g : {Gen::E0, Gen::PsiPlus, Gen::PsiMinus}) {
                auto X = operator_matrix(W, act, g, i, false);
                rep.untwisted_ek.record(X && keeps(*X), "untwisted " + gen_name(g, i));
            }
            auto F = operator_matrix(W, act, Gen::F0, i, false);
            for (std::size_t b = 0; b < W.num_blocks(); ++b) {
                const auto& mu = W.block(b).mu;
                if (!mu.boundary(i) || mu.flat()[static_cast<std::size_t>(i - 1)] == 0) continue;
                ++rep.boundary_instances;
                Profile pr = profile(mu);
                const int Ni = pr.N[i];
                const auto v = dense(A.multiply(A.x_mu(mu.flat()), A.L_bracket(Ni, pr.c[Ni])), A.dim());
                bool escapes = F.has_value();
                if (escapes) {
                    const auto w = to_space(W, b, v);
                    escapes = I.contains(w) && !I.contains(F->apply(w));
                }
                rep.boundary_escape.record(escapes, "untwisted f[" + std::to_string(i) + "] on " + mu.to_string());
            }
        }
    }
    return rep;
}

Tally k_lambda_idempotents(int n, const std::vector<int>& m_parts) {
    Tally t;
    const int r = static_cast<int>(m_parts.size());
    const int m = flat_m(m_parts);
    AKAlgebra<ParamPoly> A(generic_params(n, r));
    ShiftedAction<ParamPoly> act(A, m_parts);
    const auto weights = enumerate_multicompositions(n, m_parts);
    const auto id = A.index(std::vector<int>(static_cast<std::size_t>(n), 0), 0);
    for (const auto& mu : weights) {
        // K_i^+ = (psi^-_{i,0})^{-1} read off the realized psi^- scalar
        std::vector<ParamPoly> K;
        for (int i = 1; i < m; ++i) {
            ParamPoly c;
            const auto img = act.image(Gen::PsiMinus, i, mu, true);
            for (const auto& [b, v] : img.Z.terms())
                if (b == id) c = v;
            K.push_back(c.unit_inverse());
        }
        auto bracket = [&](int i, int c, int s_max) {
            const ParamPoly& Kp = K[static_cast<std::size_t>(i - 1)];
            const ParamPoly Km = Kp.unit_inverse();
            ParamPoly num(1), den(1);
            for (int s = 1; s <= s_max; ++s) {
                num *= Kp * qpow(c - s + 1) - Km * qpow(-c + s - 1);
                den *= qpow(s) - qpow(-s);
            }
            auto quo = num.divide_exact(den);
            if (!quo) throw std::logic_error("K bracket is not a Laurent polynomial");
            return *quo;
        };
        for (const auto& lam : weights) {
            const auto& l = lam.flat();
            ParamPoly v(1);
            for (int i = 1; i < m && !v.is_zero(); ++i) {
                const int a = l[static_cast<std::size_t>(i - 1)], b = l[static_cast<std::size_t>(i)];
                v *= bracket(i, a + b + 2 * n, 2 * a + 2 * n);
                v *= bracket(i, b - a - 1, 2 * n * b);
            }
            const ParamPoly expect(lam == mu ? 1 : 0);
            t.record(v == expect && k_lambda_value(l, mu.flat(), n) == expect,
                     "K^" + lam.to_string() + " on " + mu.to_string());
        }
    }
    return t;
}

Tally schur_generators_match(int n, int r, const std::vector<int>& m_parts) {
    Tally t;
    const int m = flat_m(m_parts);
    AKAlgebra<ParamPoly> A(generic_params(n, r));
    ShiftedAction<ParamPoly> act(A, m_parts);
    for (const auto& mu : enumerate_multicompositions(n, m_parts))
        for (int i = 1; i < m; ++i)
            for (bool is_E : {true, false}) {
                const auto rho = act.image(is_E ? Gen::E0 : Gen::F0, i, mu, true);
                const auto S = schur_operator_image(A, is_E, i, mu);
                bool ok = rho.target == S.target;
                if (ok && rho.target)
                    ok = S.den * act.image_numerator(rho, true) == rho.den * act.image_numerator(S, true);
                t.record(ok, std::string(is_E ? "SE" : "SF") + std::to_string(i) + " on " + mu.to_string());
            }
    return t;
}

DoubleCentralizerReport double_centralizer(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                           std::uint64_t seed) {
    DoubleCentralizerReport rep;
    const int m = flat_m(m_parts);
    bool first = true;
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        RightRegular R(A);
        WeightSpace W(R, m_parts, ModuleKind::quotient);
        ShiftedAction<Fp> act(A, m_parts);
        std::vector<AKElement<Fp>> Tg;
        for (int g = 0; g < n; ++g) Tg.push_back(A.T(g));
        const std::size_t commutant = commutant_dim(W, Tg);
        std::vector<PrimeMatrix> gens;
        for (int i = 1; i < m; ++i)
            for (Gen g : all_gens()) {
                auto X = operator_matrix(W, act, g, i, true);
                if (!X) throw std::logic_error("generator image outside its target block");
                gens.push_back(std::move(*X));
            }
        for (std::size_t b = 0; b < W.num_blocks(); ++b) gens.push_back(W.projection(b));
        const std::size_t image_rho = generated_algebra_dim(gens, W.dim(), W.prime());
        std::vector<PrimeMatrix> sig;
        for (std::uint32_t b = 0; b < A.dim(); ++b) sig.push_back(W.right_action(A.basis(b)));
        const std::size_t image_sigma = span_dim(sig, W.dim(), W.prime());
        if (first) {
            rep.dim_W = W.dim();
            rep.commutant = commutant;
            rep.image_rho = image_rho;
            rep.image_sigma = image_sigma;
            rep.dim_H = A.dim();
            first = false;
        } else if (commutant != rep.commutant || image_rho != rep.image_rho || image_sigma != rep.image_sigma) {
            rep.stable_across_points = false;
        }
    }
    return rep;
}

}  // namespace akschur
