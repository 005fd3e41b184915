// Basis of H_{n,r} and the defining relations of M^mu and M~^mu.

#include <string>
#include <vector>

#include "akschur/modules.hpp"
#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"

namespace akschur {

bool BasisReport::ok() const {
    for (auto x : ranks_LT)
        if (x != expected) return false;
    for (auto x : ranks_TL)
        if (x != expected) return false;
    return !ranks_LT.empty() && relations_exact && associative;
}

namespace {

// Left multiplication by the defining relations kills every basis monomial.
bool regular_relations_hold(const AKAlgebra<ParamPoly>& A) {
    using E = AKElement<ParamPoly>;
    const int n = A.n();
    const auto& P = A.params();
    auto T = [&](int g, const E& v) { return A.leftmul_gen(g, v); };
    for (std::uint32_t b = 0; b < A.dim(); ++b) {
        const E v = A.basis(b);
        E cyc = v;
        for (int p = A.r() - 1; p >= 0; --p) cyc = T(0, cyc) - P.Q[p] * cyc;
        if (!cyc.is_zero()) return false;
        if (n >= 2 && !(T(0, T(1, T(0, T(1, v)))) == T(1, T(0, T(1, T(0, v)))))) return false;
        for (int i = 1; i <= n - 1; ++i) {
            E quad = T(i, T(i, v)) - P.delta() * T(i, v) - v;  // (T_i - q)(T_i + q^{-1})
            if (!quad.is_zero()) return false;
            if (i + 1 <= n - 1 && !(T(i, T(i + 1, T(i, v))) == T(i + 1, T(i, T(i + 1, v))))) return false;
        }
        for (int i = 0; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                if (!(T(i, T(j, v)) == T(j, T(i, v)))) return false;
    }
    return true;
}

}  // namespace

BasisReport basis_theorem(int n, int r, std::uint64_t prime, std::uint64_t seed) {
    BasisReport rep;
    rep.n = n;
    rep.r = r;
    rep.expected = static_cast<std::size_t>(factorial(n));
    for (int i = 0; i < n; ++i) rep.expected *= static_cast<std::size_t>(r);
    {
        AKAlgebra<ParamPoly> A(generic_params(n, r));
        rep.relations_exact = regular_relations_hold(A);
    }
    rep.associative = true;
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        SpanBuilder lt(A.dim(), prime), tl(A.dim(), prime);
        for (std::uint32_t idx = 0; idx < A.dim(); ++idx) {
            auto k = A.exponents(idx);
            const auto& word = A.reduced_word(A.perm_of(idx));
            // L^k T_w, every factor applied as a generator word on the left
            AKElement<Fp> x = A.one();
            for (auto it = word.rbegin(); it != word.rend(); ++it) x = A.leftmul_gen(*it, x);
            for (int j = n; j >= 1; --j)
                for (int t = 0; t < k[j - 1]; ++t) x = A.leftmul_L_by_word(j, x);
            lt.add(dense(x, A.dim()));
            // T_w L^k
            AKElement<Fp> y = A.one();
            for (int j = n; j >= 1; --j)
                for (int t = 0; t < k[j - 1]; ++t) y = A.leftmul_L_by_word(j, y);
            for (auto it = word.rbegin(); it != word.rend(); ++it) y = A.leftmul_gen(*it, y);
            tl.add(dense(y, A.dim()));
        }
        rep.ranks_LT.push_back(lt.rank());
        rep.ranks_TL.push_back(tl.rank());
        RightRegular R(A);
        for (int g = 0; g < n; ++g) {
            PrimeMatrix left(A.dim(), A.dim(), prime);
            for (std::uint32_t b = 0; b < A.dim(); ++b) {
                const auto img = A.leftmul_gen(g, A.basis(b));
                for (const auto& [i, c] : img.terms()) left(i, b) = c.v;
            }
            for (int h = 0; h < n; ++h)
                if (!commute(left, R.T(h))) rep.associative = false;
        }
    }
    return rep;
}

bool WeightDims::ok(long long dim_H) const {
    if (!kills_relations || dim_M.empty()) return false;
    for (std::size_t p = 0; p < dim_M.size(); ++p) {
        if (dim_M[p] != expected_quotient || dim_H - dim_I[p] != expected_quotient) return false;
        if (dim_Mt[p] != expected_tilde || dim_H - dim_It[p] != expected_tilde) return false;
    }
    return true;
}

bool DefiningRelationsReport::ok() const {
    if (weights.empty()) return false;
    for (const auto& w : weights)
        if (!w.ok(dim_H)) return false;
    return true;
}

DefiningRelationsReport defining_relations(int n, int r, const std::vector<int>& m_parts, std::uint64_t prime,
                                           std::uint64_t seed) {
    DefiningRelationsReport rep;
    const auto weights = enumerate_multicompositions(n, m_parts);
    {
        AKAlgebra<ParamPoly> A(generic_params(n, r));
        ShiftedAction<ParamPoly> act(A, m_parts);
        rep.dim_H = A.dim();
        for (const auto& mu : weights) {
            WeightDims w;
            w.mu = mu;
            w.expected_quotient = expected_dim(mu, ModuleKind::quotient, r);
            w.expected_tilde = expected_dim(mu, ModuleKind::tilde, r);
            bool kills = true;
            const auto m = A.m_mu(mu);
            const auto x = A.x_mu(mu.flat());
            for (const auto& g : act.relation_generators(mu, true))
                if (!A.multiply(m, g).is_zero()) kills = false;
            for (const auto& g : act.relation_generators(mu, false))
                if (!A.multiply(x, g).is_zero()) kills = false;
            w.kills_relations = kills;
            rep.weights.push_back(std::move(w));
        }
    }
    for (const auto& pt : specialization_points(prime, seed)) {
        AKAlgebra<Fp> A(point_params(n, r, pt));
        RightRegular R(A);
        ShiftedAction<Fp> act(A, m_parts);
        for (std::size_t k = 0; k < weights.size(); ++k) {
            const auto& mu = weights[k];
            auto& w = rep.weights[k];
            auto dense_all = [&](const std::vector<AKElement<Fp>>& xs) {
                std::vector<Vec> out;
                for (const auto& x : xs) out.push_back(dense(x, A.dim()));
                return out;
            };
            w.dim_M.push_back(static_cast<long long>(right_closure(R, {dense(A.m_mu(mu), A.dim())}).rank()));
            w.dim_Mt.push_back(static_cast<long long>(right_closure(R, {dense(A.x_mu(mu.flat()), A.dim())}).rank()));
            w.dim_I.push_back(static_cast<long long>(right_closure(R, dense_all(act.relation_generators(mu, true))).rank()));
            w.dim_It.push_back(
                static_cast<long long>(right_closure(R, dense_all(act.relation_generators(mu, false))).rank()));
        }
    }
    return rep;
}

}  // namespace akschur
