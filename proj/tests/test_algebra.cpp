#include <gtest/gtest.h>

#include "akschur/ariki_koike.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

namespace {

using El = AKElement<ParamPoly>;

El power(const AKAlgebra<ParamPoly>& A, const El& x, int e) {
    El out = A.one();
    for (int t = 0; t < e; ++t) out = A.multiply(out, x);
    return out;
}

}  // namespace

TEST(AKAlgebra, DimensionIsRToTheNTimesNFactorial) {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            AKAlgebra<ParamPoly> A(generic_params(n, r));
            long long expect = factorial(n);
            for (int i = 0; i < n; ++i) expect *= r;
            EXPECT_EQ(static_cast<long long>(A.dim()), expect) << n << "," << r;
        }
}

TEST(AKAlgebra, CyclotomicRelation) {
    AKAlgebra<ParamPoly> A(generic_params(2, 3));
    El prod = A.one();
    for (int p = 0; p < 3; ++p) prod = A.multiply(prod, A.T(0) - A.scalar(Qvar(p)));
    EXPECT_TRUE(prod.is_zero());
    // one factor short is nonzero
    EXPECT_FALSE(A.multiply(A.T(0) - A.scalar(Qvar(0)), A.T(0) - A.scalar(Qvar(1))).is_zero());
}

TEST(AKAlgebra, QuadraticAndBraidRelations) {
    AKAlgebra<ParamPoly> A(generic_params(3, 2));
    for (int i = 1; i <= 2; ++i)
        EXPECT_EQ(A.multiply(A.T(i), A.T(i)), qdelta() * A.T(i) + A.one()) << i;
    EXPECT_EQ(A.multiply({A.T(1), A.T(2), A.T(1)}), A.multiply({A.T(2), A.T(1), A.T(2)}));
    EXPECT_EQ(A.multiply({A.T(0), A.T(1), A.T(0), A.T(1)}), A.multiply({A.T(1), A.T(0), A.T(1), A.T(0)}));
    EXPECT_EQ(A.multiply(A.T(0), A.T(2)), A.multiply(A.T(2), A.T(0)));
}

TEST(AKAlgebra, JucysMurphyElements) {
    AKAlgebra<ParamPoly> A(generic_params(3, 2));
    // L_2 = T_1 L_1 T_1
    EXPECT_EQ(A.L(2), A.multiply({A.T(1), A.T(0), A.T(1)}));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) EXPECT_EQ(A.multiply(A.L(i), A.L(j)), A.multiply(A.L(j), A.L(i)));
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(A.multiply(A.L(j), A.L_inv(j)), A.one());
    // L_bracket(j, r) vanishes; L_bracket(1, k) = (L_1 - Q_0)...(L_1 - Q_{k-1})
    EXPECT_TRUE(A.L_bracket(3, 2).is_zero());
    EXPECT_EQ(A.L_bracket(1, 1), A.L(1) - A.scalar(Qvar(0)));
    EXPECT_EQ(A.L_power(2, 3), power(A, A.L(2), 3));
}

TEST(AKAlgebra, XMuIsSymmetrizer) {
    AKAlgebra<ParamPoly> A(generic_params(2, 1));
    EXPECT_EQ(A.x_mu({2}), A.one() + qvar() * A.T(1));
    EXPECT_EQ(A.x_mu({1, 1}), A.one());
    EXPECT_EQ(A.multiply(A.x_mu({2}), A.T(1)), qvar() * A.x_mu({2}));
}

TEST(AKAlgebra, BasisTheoremSmall) {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 1}}) {
        auto rep = basis_theorem(n, r, kDefaultPrime, 1);
        EXPECT_TRUE(rep.ok()) << n << "," << r;
        EXPECT_EQ(rep.ranks_LT.size(), 3u);
        for (auto k : rep.ranks_TL) EXPECT_EQ(k, rep.expected);
    }
}

class IdentityProperty : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(IdentityProperty, AllIdentitiesHold) {
    auto [n, r] = GetParam();
    AKAlgebra<ParamPoly> A(generic_params(n, r));
    for (const auto& ic : identity_checks()) {
        auto t = ic.run(A);
        EXPECT_TRUE(t.ok()) << ic.id << ": " << (t.failures.empty() ? "" : t.failures.front());
    }
}

INSTANTIATE_TEST_SUITE_P(SmallShapes, IdentityProperty,
                         ::testing::Values(std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 2}, std::pair{3, 2}));
