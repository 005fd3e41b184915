#pragma once

// Cyclic right ideals m_mu H and x_mu H realized inside H_{n,r} at a specialization point,
// block operators on their direct sum, and the commutant / generated-algebra solvers.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ariki_koike.hpp"
#include "combinatorics.hpp"
#include "prime_field.hpp"

namespace akschur {

using Vec = std::vector<std::uint64_t>;

inline AKElement<Fp> sparse_from_dense(const Vec& v, std::uint64_t p) {
    std::vector<AKElement<Fp>::Term> t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) t.push_back({static_cast<std::uint32_t>(i), Fp{v[i], p}});
    return AKElement<Fp>(std::move(t));
}

inline bool is_zero_vec(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

inline Vec axpy(const Vec& y, std::uint64_t a, const Vec& x, std::uint64_t p) {
    Vec out = y;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (out[i] + mulmod(a, x[i], p)) % p;
    return out;
}

// Matrices of x -> x T_g on H_{n,r} (columns indexed by the AK basis).
class RightRegular {
public:
    explicit RightRegular(const AKAlgebra<Fp>& A) : A_(A), p_(A.params().one.p), dim_(A.dim()) {
        for (int g = 0; g < A.n(); ++g) {
            PrimeMatrix M(dim_, dim_, p_);
            PrimeMatrix Minv(dim_, dim_, p_);
            AKElement<Fp> tg = A.T(g), tginv = A.T_inv(g);
            for (std::uint32_t b = 0; b < dim_; ++b) {
                const auto x = A.monomial_times(b, tg);
                for (const auto& [i, c] : x.terms()) M(i, b) = c.v;
                const auto y = A.monomial_times(b, tginv);
                for (const auto& [i, c] : y.terms()) Minv(i, b) = c.v;
            }
            T_.push_back(std::move(M));
            Tinv_.push_back(std::move(Minv));
        }
    }

    const AKAlgebra<Fp>& algebra() const { return A_; }
    std::uint64_t prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    const PrimeMatrix& T(int g) const { return T_.at(static_cast<std::size_t>(g)); }

    Vec times_T(const Vec& v, int g) const { return T_[g].apply(v); }
    Vec times_T_inv(const Vec& v, int g) const { return Tinv_[g].apply(v); }

    // v L_j = v T_{j-1} ... T_1 T_0 T_1 ... T_{j-1}
    Vec times_L(Vec v, int j) const {
        for (int t = j - 1; t >= 1; --t) v = times_T(v, t);
        v = times_T(v, 0);
        for (int t = 1; t <= j - 1; ++t) v = times_T(v, t);
        return v;
    }

    // v L_1^{k_1} ... L_n^{k_n} T_w for the basis monomial idx
    Vec times_monomial(Vec v, std::uint32_t idx) const {
        auto k = A_.exponents(idx);
        for (int j = 1; j <= A_.n(); ++j)
            for (int t = 0; t < k[j - 1]; ++t) v = times_L(v, j);
        for (int letter : A_.reduced_word(A_.perm_of(idx))) v = times_T(v, letter);
        return v;
    }

    Vec times(const Vec& v, const AKElement<Fp>& h) const {
        Vec out(dim_, 0);
        for (const auto& [b, c] : h.terms()) out = axpy(out, c.v, times_monomial(v, b), p_);
        return out;
    }

    // Matrix of x -> x h on H.
    PrimeMatrix matrix_of(const AKElement<Fp>& h) const {
        PrimeMatrix M(dim_, dim_, p_);
        for (std::uint32_t b = 0; b < dim_; ++b) {
            const auto x = A_.multiply(A_.basis(b), h);
            for (const auto& [i, c] : x.terms()) M(i, b) = c.v;
        }
        return M;
    }

private:
    const AKAlgebra<Fp>& A_;
    std::uint64_t p_;
    std::size_t dim_;
    std::vector<PrimeMatrix> T_, Tinv_;
};

// Right submodule of H generated by the given vectors (closure under x -> x T_g).
inline SpanBuilder right_closure(const RightRegular& R, const std::vector<Vec>& gens) {
    SpanBuilder span(R.dim(), R.prime());
    std::vector<Vec> queue;
    for (const auto& g : gens)
        if (span.add(g)) queue.push_back(g);
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (int g = 0; g < R.algebra().n(); ++g) {
            Vec w = R.times_T(v, g);
            if (span.add(w)) queue.push_back(std::move(w));
        }
    }
    return span;
}

enum class ModuleKind { quotient, tilde };  // M^mu = m_mu H, M~^mu = x_mu H

struct CyclicModule {
    MultiComposition mu;
    ModuleKind kind = ModuleKind::quotient;
    Vec generator;                        // m_mu or x_mu in AK coordinates
    std::vector<std::uint32_t> labels;    // AK index of L^p T_y for each basis vector
    std::vector<Vec> basis;               // generator * L^p T_y
    CoordSolver solver;

    std::size_t dim() const { return basis.size(); }

    Vec coords(const Vec& v) const {
        auto c = solver.coords(v);
        if (!c) throw std::runtime_error("vector outside module " + mu.to_string());
        return *c;
    }
    std::optional<Vec> try_coords(const Vec& v) const { return solver.coords(v); }

    Vec vector_of(const Vec& coords, std::uint64_t p) const {
        Vec out(generator.size(), 0);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k]) out = axpy(out, coords[k], basis[k], p);
        return out;
    }
};

// Basis {g L_1^{p_1}...L_n^{p_n} T_y : p_i < c_i (quotient) or < r (tilde), y distinguished}.
inline CyclicModule build_module(const RightRegular& R, const MultiComposition& mu, ModuleKind kind) {
    const auto& A = R.algebra();
    CyclicModule M;
    M.mu = mu;
    M.kind = kind;
    M.generator = dense(kind == ModuleKind::quotient ? A.m_mu(mu) : A.x_mu(mu.flat()), A.dim());
    Profile pr = profile(mu);
    CosetData cd(mu.flat());
    std::vector<int> bound(A.n());
    for (int j = 1; j <= A.n(); ++j) bound[j - 1] = kind == ModuleKind::quotient ? pr.c[j] : A.r();
    std::vector<int> p(A.n(), 0);
    for (const auto& y : cd.representatives()) {
        int yi = A.perm_index(y);
        std::fill(p.begin(), p.end(), 0);
        while (true) {
            std::uint32_t idx = A.index(p, yi);
            M.labels.push_back(idx);
            M.basis.push_back(R.times_monomial(M.generator, idx));
            int pos = 0;
            while (pos < A.n() && ++p[pos] == bound[pos]) p[pos++] = 0;
            if (pos == A.n()) break;
        }
    }
    M.solver = CoordSolver(M.basis, A.dim(), R.prime());
    return M;
}

inline long long expected_dim(const MultiComposition& mu, ModuleKind kind, int r) {
    Profile pr = profile(mu);
    long long d = CosetData(mu.flat()).num_representatives();
    for (int j = 1; j <= mu.n(); ++j) d *= kind == ModuleKind::quotient ? pr.c[j] : r;
    return d;
}

// Direct sum of cyclic modules over all weights of Lambda_{n,r}(m).
class WeightSpace {
public:
    WeightSpace(const RightRegular& R, const std::vector<int>& m_parts, ModuleKind kind) : R_(R), kind_(kind) {
        int off = 0;
        for (auto& mu : enumerate_multicompositions(R.algebra().n(), m_parts)) {
            blocks_.push_back(build_module(R, mu, kind));
            offset_.push_back(off);
            off += static_cast<int>(blocks_.back().dim());
        }
        total_ = static_cast<std::size_t>(off);
    }

    const RightRegular& regular() const { return R_; }
    ModuleKind kind() const { return kind_; }
    std::size_t dim() const { return total_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const CyclicModule& block(std::size_t b) const { return blocks_[b]; }
    std::size_t offset(std::size_t b) const { return static_cast<std::size_t>(offset_[b]); }
    std::uint64_t prime() const { return R_.prime(); }

    std::optional<std::size_t> find(const Composition& flat) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (blocks_[b].mu.flat() == flat) return b;
        return std::nullopt;
    }

    // Matrix of right multiplication by h on one block.
    PrimeMatrix block_right_action(std::size_t b, const AKElement<Fp>& h) const {
        const auto& M = blocks_[b];
        PrimeMatrix out(M.dim(), M.dim(), prime());
        for (std::size_t k = 0; k < M.dim(); ++k) {
            Vec c = M.coords(R_.times(M.basis[k], h));
            for (std::size_t i = 0; i < M.dim(); ++i) out(i, k) = c[i];
        }
        return out;
    }

    PrimeMatrix right_action(const AKElement<Fp>& h) const {
        PrimeMatrix out(total_, total_, prime());
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            PrimeMatrix blk = block_right_action(b, h);
            place(out, blk, b, b);
        }
        return out;
    }

    // Operator sending generator(src) * h_k to images[src] * h_k, where images[src] lies in
    // block target[src]; a source without a target maps to zero.
    struct Image {
        std::optional<std::size_t> target;
        Vec element;  // AK coordinates
    };

    // Returns nullopt when some image leaves the target module.
    std::optional<PrimeMatrix> operator_from_images(const std::vector<Image>& images) const {
        PrimeMatrix out(total_, total_, prime());
        for (std::size_t s = 0; s < blocks_.size(); ++s) {
            const auto& img = images[s];
            if (!img.target) continue;
            const auto& src = blocks_[s];
            const auto& dst = blocks_[*img.target];
            for (std::size_t k = 0; k < src.dim(); ++k) {
                auto c = dst.try_coords(R_.times_monomial(img.element, src.labels[k]));
                if (!c) return std::nullopt;
                for (std::size_t i = 0; i < dst.dim(); ++i) out(offset(*img.target) + i, offset(s) + k) = (*c)[i];
            }
        }
        return out;
    }

    PrimeMatrix projection(std::size_t b) const {
        PrimeMatrix out(total_, total_, prime());
        for (std::size_t k = 0; k < blocks_[b].dim(); ++k) out(offset(b) + k, offset(b) + k) = 1;
        return out;
    }

    void place(PrimeMatrix& out, const PrimeMatrix& blk, std::size_t row_block, std::size_t col_block) const {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) out(offset(row_block) + i, offset(col_block) + j) = blk(i, j);
    }

    PrimeMatrix sub_block(const PrimeMatrix& X, std::size_t row_block, std::size_t col_block) const {
        PrimeMatrix out(blocks_[row_block].dim(), blocks_[col_block].dim(), prime());
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = X(offset(row_block) + i, offset(col_block) + j);
        return out;
    }

private:
    const RightRegular& R_;
    ModuleKind kind_;
    std::vector<CyclicModule> blocks_;
    std::vector<int> offset_;
    std::size_t total_ = 0;
};

inline Vec flatten(const PrimeMatrix& M) { return M.data(); }

inline bool commute(const PrimeMatrix& X, const PrimeMatrix& Y) { return X * Y == Y * X; }

// dim of {Phi : Phi A_g = A_g Phi for all g}, solved blockwise over weight pairs;
// act[b][g] is the matrix of the g-th right generator on block b.
inline std::size_t commutant_dim_blocks(const std::vector<std::vector<PrimeMatrix>>& act, std::uint64_t p) {
    std::size_t total = 0;
    for (std::size_t s = 0; s < act.size(); ++s) {
        for (std::size_t t = 0; t < act.size(); ++t) {
            if (act[s].empty() || act[t].empty()) continue;
            std::size_t ds = act[s][0].rows(), dt = act[t][0].rows();
            if (!ds || !dt) continue;
            const std::size_t ngen = act[s].size();
            // unknown Phi is dt x ds, entry (a, b) at column a * ds + b
            PrimeMatrix sys(ngen * dt * ds, dt * ds, p);
            std::size_t row = 0;
            for (std::size_t g = 0; g < ngen; ++g) {
                const auto& As = act[s][g];
                const auto& At = act[t][g];
                for (std::size_t a = 0; a < dt; ++a)
                    for (std::size_t c = 0; c < ds; ++c, ++row) {
                        // (Phi As)(a, c) - (At Phi)(a, c)
                        for (std::size_t b = 0; b < ds; ++b) sys(row, a * ds + b) = (sys(row, a * ds + b) + As(b, c)) % p;
                        for (std::size_t e = 0; e < dt; ++e) {
                            std::uint64_t v = At(a, e);
                            if (!v) continue;
                            std::uint64_t& x = sys(row, e * ds + c);
                            x = (x + p - v) % p;
                        }
                    }
            }
            total += dt * ds - sys.rank();
        }
    }
    return total;
}

inline std::size_t commutant_dim(const WeightSpace& W, const std::vector<AKElement<Fp>>& right_gens) {
    std::vector<std::vector<PrimeMatrix>> act(W.num_blocks());
    for (std::size_t b = 0; b < W.num_blocks(); ++b)
        for (const auto& h : right_gens) act[b].push_back(W.block_right_action(b, h));
    return commutant_dim_blocks(act, W.prime());
}

// Dimension of the unital algebra generated by the given square matrices, by left
// multiplication of the growing span with the generators until nothing new appears.
inline std::size_t generated_algebra_dim(const std::vector<PrimeMatrix>& gens, std::size_t dim, std::uint64_t p,
                                         bool include_identity = true) {
    SpanBuilder span(dim * dim, p);
    std::vector<PrimeMatrix> elems, queue;
    auto push = [&](const PrimeMatrix& X) {
        if (span.add(flatten(X))) queue.push_back(X);
    };
    if (include_identity) push(PrimeMatrix::identity(dim, p));
    for (const auto& g : gens) push(g);
    while (!queue.empty()) {
        PrimeMatrix X = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) push(g * X);
        if (span.rank() == dim * dim) break;
    }
    return span.rank();
}

inline std::size_t span_dim(const std::vector<PrimeMatrix>& mats, std::size_t dim, std::uint64_t p) {
    SpanBuilder span(dim * dim, p);
    for (const auto& M : mats) span.add(flatten(M));
    return span.rank();
}

}  // namespace akschur
