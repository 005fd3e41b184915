// The q = 1 tensor space against the q = 1 modules M^mu: relations of v'_mu, block
// dimensions, generator intertwining, commutation, and the double centralizer dimensions.

#include <map>
#include <string>
#include <vector>

#include "akschur/modules.hpp"
#include "akschur/qone.hpp"
#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"
#include "block_ops.hpp"

namespace akschur {

bool QOneReport::ok() const {
    return relations.ok() && block_dims.ok() && intertwining.ok() && commutation.ok() && matrices.ok() &&
           commutant == image_rho && image_sigma == dim_H && commutant == generic_commutant &&
           image_rho == generic_image_rho && image_sigma == generic_image_sigma;
}

namespace {

Vec dense_tensor(const QOneTensor& V, const TensorState& s, const SpecializationPoint& pt) {
    Vec out(V.dim(), 0);
    for (const auto& [k, c] : s.terms()) out[V.index(k)] = c.specialize(pt).v;
    return out;
}

// Matrix of a linear map on the tensor space given on basis tensors.
template <class F>
PrimeMatrix tensor_matrix(const QOneTensor& V, const SpecializationPoint& pt, std::uint64_t p, F&& f) {
    PrimeMatrix M(V.dim(), V.dim(), p);
    for (std::size_t c = 0; c < V.dim(); ++c) {
        const auto col = dense_tensor(V, f(V.basis(c)), pt);
        for (std::size_t r = 0; r < V.dim(); ++r) M(r, c) = col[r];
    }
    return M;
}

std::string label(const char* g, int i, const MultiComposition& mu) {
    return std::string(g) + "[" + std::to_string(i) + "] on " + mu.to_string();
}

}  // namespace

QOneReport q_one_theorem(int n, const std::vector<int>& m_parts, std::uint64_t prime, std::uint64_t seed) {
    QOneReport rep;
    const int r = static_cast<int>(m_parts.size());
    QOneSpace V(m_parts);
    QOneTensor Vn(V, n);
    const int m = V.m();
    AKAlgebra<ParamPoly> A1(q_one_params(n, r));
    ShiftedAction<ParamPoly> act1(A1, m_parts);
    const auto weights = enumerate_multicompositions(n, m_parts);
    const auto pts = specialization_points(prime, seed);

    auto times = [&](const TensorState& v, const AKElement<ParamPoly>& h) { return Vn.times(v, A1, h); };

    // relations, block dimensions, the printed h_{i,1} formula and exact intertwining
    rep.printed_h1_matches = true;
    for (const auto& mu : weights) {
        const auto& f = mu.flat();
        const auto v = Vn.v_prime(f);
        bool kills = true;
        for (const auto& rho : act1.relation_generators(mu, true))
            if (!times(v, rho).is_zero()) kills = false;
        rep.relations.record(kills, "v' on " + mu.to_string());

        const long long expect = expected_dim(mu, ModuleKind::quotient, r);
        long long count = 0;
        for (std::size_t k = 0; k < Vn.dim(); ++k)
            if (Vn.weight(Vn.key(k)) == f) ++count;
        SpanBuilder span(Vn.dim(), prime);
        for (std::uint32_t b = 0; b < A1.dim(); ++b) span.add(dense_tensor(Vn, times(v, A1.basis(b)), pts[0]));
        rep.block_dims.record(count == expect && static_cast<long long>(span.rank()) == expect,
                              "block " + mu.to_string());

        Profile pr = profile(mu);
        for (int i = 1; i < m; ++i) {
            const int d = f[static_cast<std::size_t>(i - 1)] - f[static_cast<std::size_t>(i)];
            auto check = [&](const char* name, const TensorState& lie, const GenImage<ParamPoly>& img, long den) {
                TensorState rhs;
                if (img.target) rhs = times(Vn.v_prime(*img.target), img.Z);
                rep.intertwining.record(ParamPoly(den) * lie == rhs, label(name, i, mu));
            };
            check("E0", Vn.act(QOneGen::E, i, 0, v), act1.image(Gen::E0, i, mu, true), 1);
            check("F0", Vn.act(QOneGen::F, i, 0, v), act1.image(Gen::F0, i, mu, true), 1);
            check("H1", Vn.act(QOneGen::H, i, 1, v), act1.image(Gen::H1, i, mu, false), 1);
            check("Hm1", Vn.act(QOneGen::H, i, -1, v), act1.image(Gen::Hm1, i, mu, false), 1);
            rep.intertwining.record(Vn.act(QOneGen::H, i, 0, v) == ParamPoly(d) * v, label("H0", i, mu));
            // f_{i,1} = -(1/2)[h_{i,1}, f_{i,0}]
            const auto F0 = act1.image(Gen::F0, i, mu, true);
            GenImage<ParamPoly> F1{std::nullopt, {}, ParamPoly(1)};
            if (F0.target) {
                MultiComposition lam(m_parts, *F0.target);
                const auto h_lam = act1.image(Gen::H1, i, lam, false).Z;
                const auto h_mu = act1.image(Gen::H1, i, mu, false).Z;
                F1 = {F0.target, A1.multiply(F0.Z, h_mu) - A1.multiply(h_lam, F0.Z), ParamPoly(2)};
            }
            check("F1", Vn.act(QOneGen::F, i, 1, v), F1, 2);

            // printed form: (mu_i - mu_{i+1}) v' (sum L_{N_{i-1}+p} + sum L_{N_i+p})
            AKElement<ParamPoly> sum;
            for (int p = 1; p <= f[static_cast<std::size_t>(i - 1)]; ++p) sum += A1.L(pr.N[i - 1] + p);
            for (int p = 1; p <= f[static_cast<std::size_t>(i)]; ++p) sum += A1.L(pr.N[i] + p);
            if (!(times(v, ParamPoly(d) * sum) == Vn.act(QOneGen::H, i, 1, v))) rep.printed_h1_matches = false;
        }
    }

    // Lie generators commute with the right generators on every basis tensor
    for (std::size_t k = 0; k < Vn.dim(); ++k) {
        const auto b = Vn.basis(k);
        for (int i = 1; i < m; ++i)
            for (QOneGen g : {QOneGen::E, QOneGen::F, QOneGen::H})
                for (int t = -1; t <= 1; ++t) {
                    bool ok = true;
                    for (int s = 0; s < n; ++s)
                        if (!(Vn.act(g, i, t, Vn.times_T(b, s)) == Vn.times_T(Vn.act(g, i, t, b), s))) ok = false;
                    rep.commutation.record(ok, "tensor " + std::to_string(k));
                }
    }

    // block operators at points: Phi(m_mu h) = v'_mu h intertwines everything
    bool first = true;
    for (const auto& pt : pts) {
        AKAlgebra<Fp> A(point_params(n, r, pt, true));
        RightRegular R(A);
        WeightSpace W(R, m_parts, ModuleKind::quotient);
        ShiftedAction<Fp> act(A, m_parts);
        PrimeMatrix Phi(Vn.dim(), W.dim(), prime);
        for (std::size_t b = 0; b < W.num_blocks(); ++b) {
            const auto& M = W.block(b);
            const auto v = Vn.v_prime(M.mu.flat());
            for (std::size_t k = 0; k < M.dim(); ++k) {
                const auto col = dense_tensor(Vn, times(v, A1.basis(M.labels[k])), pt);
                for (std::size_t row = 0; row < Vn.dim(); ++row) Phi(row, W.offset(b) + k) = col[row];
            }
        }
        rep.matrices.record(W.dim() == Vn.dim() && Phi.rank() == Vn.dim(), "Phi invertible");
        auto lie = [&](QOneGen g, int i, int t) {
            return tensor_matrix(Vn, pt, prime, [&](const TensorState& s) { return Vn.act(g, i, t, s); });
        };
        auto block_op = [&](Gen g, int i, bool twisted) {
            auto X = operator_matrix(W, act, g, i, twisted);
            if (!X) throw std::logic_error("generator image outside its target block");
            return *X;
        };
        const Fp half = Fp::from_int(2, prime).inv();
        for (int i = 1; i < m; ++i) {
            const auto E = block_op(Gen::E0, i, true), F = block_op(Gen::F0, i, true);
            const auto H1 = block_op(Gen::H1, i, false), Hm1 = block_op(Gen::Hm1, i, false);
            PrimeMatrix H0(W.dim(), W.dim(), prime);
            for (std::size_t b = 0; b < W.num_blocks(); ++b) {
                const auto& f = W.block(b).mu.flat();
                const Fp d = Fp::from_int(f[static_cast<std::size_t>(i - 1)] - f[static_cast<std::size_t>(i)], prime);
                for (std::size_t k = 0; k < W.block(b).dim(); ++k) H0(W.offset(b) + k, W.offset(b) + k) = d.v;
            }
            PrimeMatrix F1 = F * H1 - H1 * F;
            for (std::size_t a = 0; a < F1.rows(); ++a)
                for (std::size_t c = 0; c < F1.cols(); ++c) F1(a, c) = (half * Fp{F1(a, c), prime}).v;
            const std::string si = std::to_string(i);
            rep.matrices.record(lie(QOneGen::E, i, 0) * Phi == Phi * E, "E0[" + si + "]");
            rep.matrices.record(lie(QOneGen::F, i, 0) * Phi == Phi * F, "F0[" + si + "]");
            rep.matrices.record(lie(QOneGen::H, i, 0) * Phi == Phi * H0, "H0[" + si + "]");
            rep.matrices.record(lie(QOneGen::H, i, 1) * Phi == Phi * H1, "H1[" + si + "]");
            rep.matrices.record(lie(QOneGen::H, i, -1) * Phi == Phi * Hm1, "Hm1[" + si + "]");
            rep.matrices.record(lie(QOneGen::F, i, 1) * Phi == Phi * F1, "F1[" + si + "]");
        }
        std::vector<PrimeMatrix> right;
        for (int g = 0; g < n; ++g) {
            right.push_back(tensor_matrix(Vn, pt, prime, [&](const TensorState& s) { return Vn.times_T(s, g); }));
            rep.matrices.record(Phi * W.right_action(A.T(g)) == right.back() * Phi, "T" + std::to_string(g));
        }

        // double centralizer on the tensor space, blockwise over weights
        std::map<Composition, std::vector<std::size_t>> blocks;
        for (std::size_t k = 0; k < Vn.dim(); ++k) blocks[Vn.weight(Vn.key(k))].push_back(k);
        std::vector<std::vector<PrimeMatrix>> act_blocks;
        std::vector<PrimeMatrix> gens;
        for (const auto& [w, idx] : blocks) {
            std::vector<PrimeMatrix> per;
            for (const auto& Rg : right) {
                PrimeMatrix sub(idx.size(), idx.size(), prime);
                for (std::size_t a = 0; a < idx.size(); ++a)
                    for (std::size_t c = 0; c < idx.size(); ++c) sub(a, c) = Rg(idx[a], idx[c]);
                per.push_back(std::move(sub));
            }
            act_blocks.push_back(std::move(per));
            PrimeMatrix proj(Vn.dim(), Vn.dim(), prime);
            for (auto k : idx) proj(k, k) = 1;
            gens.push_back(std::move(proj));
        }
        for (int i = 1; i < m; ++i) {
            gens.push_back(lie(QOneGen::E, i, 0));
            gens.push_back(lie(QOneGen::F, i, 0));
            for (int t = -1; t <= 1; ++t) gens.push_back(lie(QOneGen::H, i, t));
        }
        std::vector<PrimeMatrix> sig;
        for (std::uint32_t b = 0; b < A1.dim(); ++b)
            sig.push_back(tensor_matrix(Vn, pt, prime, [&](const TensorState& s) { return times(s, A1.basis(b)); }));
        const std::size_t commutant = commutant_dim_blocks(act_blocks, prime);
        const std::size_t image_rho = generated_algebra_dim(gens, Vn.dim(), prime);
        const std::size_t image_sigma = span_dim(sig, Vn.dim(), prime);
        if (first) {
            rep.commutant = commutant;
            rep.image_rho = image_rho;
            rep.image_sigma = image_sigma;
            rep.dim_H = A1.dim();
            first = false;
        } else {
            rep.matrices.record(commutant == rep.commutant && image_rho == rep.image_rho &&
                                    image_sigma == rep.image_sigma,
                                "dimensions stable across points");
        }
    }

    const auto generic = double_centralizer(n, r, m_parts, prime, seed);
    rep.generic_commutant = generic.commutant;
    rep.generic_image_rho = generic.image_rho;
    rep.generic_image_sigma = generic.image_sigma;
    return rep;
}

}  // namespace akschur
