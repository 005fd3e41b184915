// Commutation identities among T_i, L_j and L_j^{<k>} in H_{n,r}, checked exactly.

#include <string>
#include <vector>

#include "akschur/suites.hpp"

namespace akschur {

void Tally::record(bool ok, const std::string& label) {
    ++instances;
    if (ok) return;
    ++failed;
    if (failures.size() < 8) failures.push_back(label);
}

void Tally::merge(const Tally& other) {
    instances += other.instances;
    failed += other.failed;
    for (const auto& f : other.failures)
        if (failures.size() < 8) failures.push_back(f);
}

namespace {

using E = AKElement<ParamPoly>;
using Alg = AKAlgebra<ParamPoly>;

std::string lbl(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

struct Ops {
    const Alg& A;
    ParamPoly d;
    explicit Ops(const Alg& a) : A(a), d(a.params().delta()) {}

    E T(int i) const { return A.T(i); }
    E L(int j) const { return A.L(j); }
    E Lp(int j, int e) const { return A.L_power(j, e); }
    E Li(int j) const { return A.L_inv(j); }
    E Lb(int j, int k) const { return A.L_bracket(j, k); }
    E TT(int i, int j) const { return A.TT(i, j); }
    E TTt(int j, int i) const { return A.TTt(j, i); }
    E TTinv(int i, int j) const { return A.TT_inv(i, j); }
    E mul(std::initializer_list<E> f) const { return A.multiply(f); }
    E mul(const E& x, const E& y) const { return A.multiply(x, y); }
};

// ---- L_i, T_i relations ----

Tally li_lj_i(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n(); ++i)
        for (int j = i + 1; j <= A.n(); ++j) t.record(o.mul(o.L(i), o.L(j)) == o.mul(o.L(j), o.L(i)), lbl({{"i", i}, {"j", j}}));
    return t;
}

Tally li_lj_ii(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i) {
        for (int j = 1; j <= A.n(); ++j) {
            E lhs = o.mul(o.T(i), o.L(j));
            E rhs;
            if (j == i) rhs = o.mul(o.L(i + 1), o.T(i)) - o.d * o.L(i + 1);
            else if (j == i + 1) rhs = o.mul(o.L(i), o.T(i)) + o.d * o.L(i + 1);
            else rhs = o.mul(o.L(j), o.T(i));
            t.record(lhs == rhs, lbl({{"i", i}, {"j", j}}));
        }
    }
    return t;
}

Tally li_lj_iii(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i) {
        E prod = o.mul(o.L(i), o.L(i + 1));
        E sum = o.L(i) + o.L(i + 1);
        t.record(o.mul(o.T(i), prod) == o.mul(prod, o.T(i)), lbl({{"i", i}, {"product", 1}}));
        t.record(o.mul(o.T(i), sum) == o.mul(sum, o.T(i)), lbl({{"i", i}, {"sum", 1}}));
    }
    return t;
}

Tally li_lj_iv(const Alg& A) {
    Ops o(A);
    Tally t;
    std::vector<ParamPoly> scalars(A.params().Q);
    scalars.push_back(ParamPoly::var(var_x()));
    for (std::size_t s = 0; s < scalars.size(); ++s) {
        for (int i = 1; i <= A.n(); ++i) {
            E prod = A.one();
            for (int p = 1; p <= i; ++p) prod = o.mul(prod, o.L(p) - A.scalar(scalars[s]));
            for (int j = 1; j <= A.n() - 1; ++j) {
                if (j == i) continue;
                t.record(o.mul(prod, o.T(j)) == o.mul(o.T(j), prod),
                         lbl({{"a", static_cast<int>(s)}, {"i", i}, {"j", j}}));
            }
        }
    }
    return t;
}

Tally li_lj_v(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i) {
        for (int e = 1; e <= A.r() + 1; ++e) {
            E rhs1 = o.mul(o.T(i), o.Lp(i, e));
            for (int s = 0; s <= e - 1; ++s) rhs1 += o.d * o.mul(o.Lp(i, s), o.Lp(i + 1, e - s));
            t.record(o.mul(o.Lp(i + 1, e), o.T(i)) == rhs1, lbl({{"i", i}, {"t", e}, {"form", 1}}));
            E rhs2 = o.mul(o.T(i), o.Lp(i + 1, e));
            for (int s = 1; s <= e; ++s) rhs2 -= o.d * o.mul(o.Lp(i, e - s), o.Lp(i + 1, s));
            t.record(o.mul(o.Lp(i, e), o.T(i)) == rhs2, lbl({{"i", i}, {"t", e}, {"form", 2}}));
        }
    }
    return t;
}

Tally li_lj_vi(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i) {
        for (int k = 0; k <= A.r(); ++k) {
            for (int l = 0; l <= A.r(); ++l) {
                E lhs = o.mul({o.Lp(i, k), o.Lp(i + 1, l), o.T(i)});
                E rhs = o.mul({o.T(i), o.Lp(i, l), o.Lp(i + 1, k)});
                if (k <= l) {
                    for (int s = 1; s <= l - k; ++s) rhs += o.d * o.mul(o.Lp(i, l - s), o.Lp(i + 1, k + s));
                } else {
                    for (int s = 1; s <= k - l; ++s) rhs -= o.d * o.mul(o.Lp(i, k - s), o.Lp(i + 1, l + s));
                }
                t.record(lhs == rhs, lbl({{"i", i}, {"k", k}, {"l", l}}));
            }
        }
    }
    return t;
}

// ---- T_i and L_l^{<k>} ----

Tally tt_lk_i(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i)
        for (int l = 1; l <= A.n(); ++l) {
            if (l == i || l == i + 1) continue;
            for (int k = 1; k <= A.r(); ++k)
                t.record(o.mul(o.T(i), o.Lb(l, k)) == o.mul(o.Lb(l, k), o.T(i)), lbl({{"i", i}, {"l", l}, {"k", k}}));
        }
    return t;
}

Tally tt_lk_ii(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i)
        for (int k = 1; k <= A.r(); ++k) {
            E rhs = o.mul(o.Lb(i + 1, k), o.T(i)) - o.d * o.Lb(i + 1, k);
            t.record(o.mul(o.T(i), o.Lb(i, k)) == rhs, lbl({{"i", i}, {"k", k}}));
        }
    return t;
}

Tally tt_lk_iii(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i)
        for (int k = 1; k <= A.r(); ++k) {
            E rhs = o.mul(o.Lb(i, k), o.T(i)) + o.d * o.Lb(i + 1, k);
            t.record(o.mul(o.T(i), o.Lb(i + 1, k)) == rhs, lbl({{"i", i}, {"k", k}}));
        }
    return t;
}

Tally tt_lk_iv(const Alg& A) {
    Ops o(A);
    Tally t;
    const int n = A.n();
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            for (int l = 1; l <= n; ++l)
                for (int k = 1; k <= A.r(); ++k) {
                    E lhs = o.mul(o.TT(i, j), o.Lb(l, k));
                    E rhs;
                    if (l > j + 1 || i > l) {
                        rhs = o.mul(o.Lb(l, k), o.TT(i, j));
                    } else if (l == j + 1) {
                        rhs = o.mul(o.Lb(i, k), o.TT(i, j));
                        for (int p = 1; p <= j - i + 1; ++p)
                            rhs += o.d * o.mul({o.Lb(i + p, k), o.TT(i, i + p - 2), o.TT(i + p, j)});
                    } else {
                        rhs = o.mul(o.Lb(l + 1, k), o.TT(i, j) - o.d * o.mul(o.TT(i, l - 1), o.TT(l + 1, j)));
                    }
                    t.record(lhs == rhs, lbl({{"i", i}, {"j", j}, {"l", l}, {"k", k}}));
                }
    return t;
}

Tally tt_lk_v(const Alg& A) {
    Ops o(A);
    Tally t;
    const int n = A.n();
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            for (int l = 1; l <= n; ++l)
                for (int k = 1; k <= A.r(); ++k) {
                    E lhs = o.mul(o.TTt(j, i), o.Lb(l, k));
                    E rhs;
                    if (l > j + 1 || i > l) {
                        rhs = o.mul(o.Lb(l, k), o.TTt(j, i));
                    } else if (l == i) {
                        rhs = o.mul(o.Lb(j + 1, k), o.TTinv(i, j));
                    } else {
                        rhs = o.mul(o.Lb(l - 1, k), o.TTt(j, i)) +
                              o.d * o.mul({o.Lb(j + 1, k), o.TTinv(l, j), o.TTt(l - 2, i)});
                    }
                    t.record(lhs == rhs, lbl({{"i", i}, {"j", j}, {"l", l}, {"k", k}}));
                }
    return t;
}

// L_i^{<k>} conjugation and factorization through L_i^{<l>}
Tally lk_conjugation(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int i = 1; i <= A.n() - 1; ++i)
        for (int k = 1; k <= A.r(); ++k)
            t.record(o.mul({o.T(i), o.Lb(i, k), o.T(i)}) == o.Lb(i + 1, k), lbl({{"i", i}, {"k", k}}));
    for (int i = 1; i <= A.n(); ++i)
        for (int k = 1; k <= A.r(); ++k)
            for (int l = 1; l < k; ++l) {
                E core = A.one();
                for (int p = l; p <= k - 1; ++p) core = o.mul(core, A.T(0) - A.scalar(A.params().Q[p]));
                E rhs = o.mul({o.Lb(i, l), o.TTinv(1, i - 1), core, o.TT(1, i - 1)});
                t.record(o.Lb(i, k) == rhs, lbl({{"i", i}, {"k", k}, {"l", l}}));
            }
    for (int i = 1; i <= A.n(); ++i) t.record(o.Lb(i, A.r()).is_zero(), lbl({{"i", i}, {"k", A.r()}}));
    return t;
}

// ---- L_i^{+-1} against L_j^{<k>} ----

Tally li_ljlan_i(const Alg& A) {
    Ops o(A);
    Tally t;
    const int n = A.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= A.r(); ++k) {
                E lhs = o.mul(o.L(i), o.Lb(j, k));
                E rhs = o.mul(o.Lb(j, k), o.L(i));
                if (i == j) {
                    for (int p = 1; p <= j - 1; ++p) {
                        E diff = o.mul(o.Lb(j, k), o.L(j - p)) - o.mul(o.Lb(j - p, k), o.L(j));
                        rhs -= o.d * o.mul({diff, o.TTinv(j - p + 1, j - 1), o.TT(j - p, j - 1)});
                    }
                } else if (i < j) {
                    E diff = o.mul(o.Lb(j, k), o.L(i)) - o.mul(o.Lb(i, k), o.L(j));
                    rhs += o.d * o.mul({diff, o.TTinv(i + 1, j - 1), o.TT(i, j - 1)});
                }
                t.record(lhs == rhs, lbl({{"i", i}, {"j", j}, {"k", k}}));
            }
    return t;
}

Tally li_ljlan_ii(const Alg& A) {
    Ops o(A);
    Tally t;
    const int n = A.n();
    const ParamPoly d2 = o.d * o.d;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= A.r(); ++k) {
                E lhs = o.mul(o.Li(i), o.Lb(j, k));
                E rhs;
                if (i > j) {
                    rhs = o.mul(o.Lb(j, k), o.Li(i));
                } else if (i == j) {
                    rhs = o.mul({o.Lb(j, k), o.Li(j), o.TTt(j - 1, 1), o.TT(1, j - 1)});
                    for (int p = 1; p <= j - 1; ++p)
                        rhs -= o.d * o.mul({o.Lb(j - p, k), o.Li(j - p), o.TTinv(j - p + 1, j - 1), o.TTt(j - p - 1, 1),
                                            o.TT(1, j - 1)});
                } else {
                    rhs = o.mul(o.Lb(j, k), o.Li(i));
                    rhs -= o.d * o.mul({o.Lb(j, k), o.Li(j), o.TTt(j - 1, i + 1), o.TT(i, j - 1)});
                    rhs += o.d * o.mul({o.Lb(i, k), o.Li(i), o.TTt(j - 1, i + 1), o.TTt(i - 1, 1), o.TT(1, j - 1)});
                    for (int p = 1; p <= i - 1; ++p)
                        rhs -= d2 * o.mul({o.Lb(i - p, k), o.Li(i - p), o.TTt(j - 1, i + 1), o.TTt(i - p - 1, 1),
                                           o.TTinv(i - p + 1, i - 1), o.TT(1, j - 1)});
                }
                t.record(lhs == rhs, lbl({{"i", i}, {"j", j}, {"k", k}}));
            }
    return t;
}

Tally lj_qk(const Alg& A) {
    Ops o(A);
    Tally t;
    for (int j = 1; j <= A.n(); ++j)
        for (int k = 1; k <= A.r() - 1; ++k) {
            E lhs = o.mul(o.L(j) - A.scalar(A.params().Q[k]), o.Lb(j, k));
            E rhs = o.Lb(j, k + 1);
            for (int p = 1; p <= j - 1; ++p) rhs += o.d * o.mul({o.Lb(p, k), o.TTt(j - 1, p + 1), o.L(p + 1), o.TT(p, j - 1)});
            t.record(lhs == rhs, lbl({{"j", j}, {"k", k}}));
        }
    return t;
}

// L_i^{<k>} - L_i^k lies in the span of L_1^{p_1}...L_i^{p_i} T_w with p < k and w in S_{[1,i]}
Tally li_lan_support(const Alg& A) {
    Tally t;
    for (int i = 1; i <= A.n(); ++i)
        for (int k = 1; k <= A.r(); ++k) {
            E diff = A.L_bracket(i, k) - A.L_power(i, k);
            bool ok = true;
            for (const auto& [idx, c] : diff.terms()) {
                auto p = A.exponents(idx);
                for (int j = 1; j <= A.n(); ++j) {
                    if (j <= i && p[j - 1] > k - 1) ok = false;
                    if (j > i && p[j - 1] != 0) ok = false;
                }
                const auto& w = A.permutations()[static_cast<std::size_t>(A.perm_of(idx))];
                for (int j = i + 1; j <= A.n(); ++j)
                    if (w(j) != j) ok = false;
            }
            t.record(ok, lbl({{"i", i}, {"k", k}}));
        }
    return t;
}

// ---- m_mu and x_mu ----

std::vector<MultiComposition> distinct_shapes(int n, int r) {
    // m_mu depends on the flat parabolic and the block sizes a_k only
    std::vector<MultiComposition> out;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<int> m(static_cast<std::size_t>(r), n);
    for (auto& mu : enumerate_multicompositions(n, m)) {
        std::pair<std::vector<int>, std::vector<int>> key{CosetData(mu.flat()).generators(), profile(mu).a};
        bool dup = false;
        for (const auto& s : seen)
            if (s == key) dup = true;
        if (dup) continue;
        seen.push_back(key);
        out.push_back(mu);
    }
    return out;
}

Tally xmu_tw(const Alg& A) {
    Tally t;
    for (const auto& mu : distinct_shapes(A.n(), A.r())) {
        E m = A.m_mu(mu), x = A.x_mu(mu.flat());
        for (const auto& w : CosetData(mu.flat()).parabolic()) {
            E tw = A.Tw(w);
            ParamPoly ql = A.params().qpow(w.length());
            t.record(A.multiply(m, tw) == ql * m, "mu=" + mu.to_string() + " w=" + w.to_string() + " m");
            t.record(A.multiply(x, tw) == ql * x, "mu=" + mu.to_string() + " w=" + w.to_string() + " x");
        }
    }
    return t;
}

Tally mmu_kills(const Alg& A) {
    Tally t;
    const int n = A.n();
    for (const auto& mu : distinct_shapes(n, A.r())) {
        E m = A.m_mu(mu);
        Profile pr = profile(mu);
        for (int j = 1; j <= n; ++j) {
            E tail = A.L_bracket(j, pr.c[j]);
            // all k_1..k_{j-1} in [0, r]
            std::vector<int> k(static_cast<std::size_t>(j - 1), 0);
            while (true) {
                E lead = m;
                for (int p = 1; p <= j - 1; ++p) lead = A.multiply(lead, A.L_power(p, k[p - 1]));
                std::string label = "mu=" + mu.to_string() + " j=" + std::to_string(j) + " k=";
                for (int x : k) label += std::to_string(x);
                t.record(A.multiply(lead, tail).is_zero(), label);
                int pos = 0;
                while (pos < j - 1 && ++k[pos] > A.r()) k[pos++] = 0;
                if (pos == j - 1) break;
            }
        }
    }
    return t;
}

}  // namespace

const std::vector<IdentityCheck>& identity_checks() {
    static const std::vector<IdentityCheck> checks{
        {"lemma-Li-Lj-i", "L_i L_j = L_j L_i", li_lj_i},
        {"lemma-Li-Lj-ii", "T_i L_i = L_{i+1} T_i - (q-q^{-1}) L_{i+1}", li_lj_ii},
        {"lemma-Li-Lj-iii", "T_i commutes with L_i L_{i+1} and L_i + L_{i+1}", li_lj_iii},
        {"lemma-Li-Lj-iv", "(L_1-a)(L_2-a)...(L_i-a) commutes with T_j, i != j", li_lj_iv},
        {"lemma-Li-Lj-v", "L_{i+1}^t T_i = T_i L_i^t + (q-q^{-1}) sum_{s=0}^{t-1} L_i^s L_{i+1}^{t-s}", li_lj_v},
        {"lemma-Li-Lj-vi", "L_i^k L_{i+1}^l T_i = T_i L_i^l L_{i+1}^k +- (q-q^{-1}) sum ...", li_lj_vi},
        {"lemma-TT-Lk-i", "T_i L_l^<k> = L_l^<k> T_i, l != i, i+1", tt_lk_i},
        {"lemma-TT-Lk-ii", "T_i L_i^<k> = L_{i+1}^<k> T_i - (q-q^{-1}) L_{i+1}^<k>", tt_lk_ii},
        {"lemma-TT-Lk-iii", "T_i L_{i+1}^<k> = L_i^<k> T_i + (q-q^{-1}) L_{i+1}^<k>", tt_lk_iii},
        {"lemma-TT-Lk-iv", "TT_{i,j} L_l^<k> by cases l > j+1, l = j+1, j+1 > l >= i, i > l", tt_lk_iv},
        {"lemma-TT-Lk-v", "TT~_{j,i} L_l^<k> by cases l > j+1, j+1 >= l > i, l = i, i > l", tt_lk_v},
        {"lemma-Lk-conjugation", "T_i L_i^<k> T_i = L_{i+1}^<k>; L_i^<k> = L_i^<l> (TT_{1,i-1})^{-1} (T_0-Q_l)...(T_0-Q_{k-1}) TT_{1,i-1}; L_i^<r> = 0", lk_conjugation},
        {"lemma-Li-Ljlan-i", "L_i L_j^<k> = L_j^<k> L_i + correction by cases i > j, i = j, i < j", li_ljlan_i},
        {"lemma-Li-Ljlan-ii", "L_i^{-1} L_j^<k> = L_j^<k> L_i^{-1} + correction by cases i > j, i = j, i < j", li_ljlan_ii},
        {"lemma-Lj-Qk", "(L_j - Q_k) L_j^<k> = L_j^<k+1> + (q-q^{-1}) sum_p L_p^<k> TT~_{j-1,p+1} L_{p+1} TT_{p,j-1}", lj_qk},
        {"lemma-Li-lan-support", "L_i^<k> = L_i^k + sum L_1^{p_1}...L_i^{p_i} h_p, p_j <= k-1, h_p in H_[1,i]", li_lan_support},
        {"lemma-xmu-Tw", "m_mu T_w = q^{l(w)} m_mu and x_mu T_w = q^{l(w)} x_mu for w in S_mu", xmu_tw},
        {"lemma-mmu-L", "m_mu L_1^{k_1}...L_{j-1}^{k_{j-1}} L_j^<c_j> = 0", mmu_kills},
    };
    return checks;
}

Tally run_identity(const std::string& id, const AKAlgebra<ParamPoly>& A) {
    for (const auto& c : identity_checks())
        if (c.id == id) return c.run(A);
    throw std::invalid_argument("unknown identity check " + id);
}

}  // namespace akschur
