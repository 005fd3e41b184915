#include <gtest/gtest.h>

#include "akschur/shifted_action.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

TEST(Shifted, ShiftVector) {
    EXPECT_EQ(shift_vector({2, 2}), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(shift_vector({1, 1}), (std::vector<int>{1}));
    EXPECT_EQ(shift_vector({3}), (std::vector<int>{0, 0}));
    EXPECT_EQ(shift_vector({1, 2, 1}), (std::vector<int>{1, 0, 1}));
}

TEST(Shifted, BoundaryFOnSmallestCase) {
    // n = 1, m = (1,1): f_{1,0} sends m_{(1),(0)} = L_1 - Q_1 to -Q_1^{-1}(L_1 - Q_1)
    AKAlgebra<ParamPoly> A(generic_params(1, 2));
    ShiftedAction<ParamPoly> act(A, {1, 1});
    MultiComposition mu({1, 1}, {1, 0});
    auto img = act.image(Gen::F0, 1, mu, true);
    ASSERT_TRUE(img.target.has_value());
    EXPECT_EQ(*img.target, (Composition{0, 1}));
    const ParamPoly Q1 = Qvar(1);
    EXPECT_EQ(img.Z, -Q1.unit_inverse() * (A.L(1) - A.scalar(Q1)));
    EXPECT_EQ(A.m_mu(mu), A.L(1) - A.scalar(Q1));
    EXPECT_EQ(A.m_mu(MultiComposition({1, 1}, {0, 1})), A.one());
    // untwisted: no boundary factor
    EXPECT_EQ(act.image(Gen::F0, 1, mu, false).Z, A.one());
}

TEST(Shifted, EOnEmptyBlockIsZero) {
    AKAlgebra<ParamPoly> A(generic_params(1, 2));
    ShiftedAction<ParamPoly> act(A, {1, 1});
    EXPECT_FALSE(act.image(Gen::E0, 1, MultiComposition({1, 1}, {1, 0}), true).target.has_value());
    EXPECT_FALSE(act.image(Gen::F0, 1, MultiComposition({1, 1}, {0, 1}), true).target.has_value());
}

TEST(Shifted, KBracketValues) {
    EXPECT_EQ(k_bracket_value(2, 1, 0), ParamPoly(1));
    EXPECT_EQ(k_bracket_value(2, 1, 1), qint(3));
    // [3][2]/[2] = [3]
    EXPECT_EQ(k_bracket_value(2, 1, 2), qint(3));
    // [1][0] = 0
    EXPECT_TRUE(k_bracket_value(0, 1, 2).is_zero());
}

TEST(Shifted, BimoduleCommutationExact) {
    for (auto [n, m] : std::vector<std::pair<int, std::vector<int>>>{{1, {1, 1}}, {2, {2, 2}}, {2, {1, 2}}}) {
        auto rep = bimodule_commutation(n, static_cast<int>(m.size()), m, kDefaultPrime, 1, true);
        EXPECT_TRUE(rep.ok()) << n;
        EXPECT_GT(rep.exact.instances, 0u);
        EXPECT_GT(rep.specialized.instances, 0u);
    }
}

TEST(Shifted, F1RoutesAgree) { EXPECT_TRUE(f1_routes(2, 2, {2, 2}).ok()); }

TEST(Shifted, LowModeRelations) {
    auto t = low_mode_relations(2, 2, {2, 2}, kDefaultPrime, 1);
    EXPECT_TRUE(t.ok()) << (t.failures.empty() ? "" : t.failures.front());
    EXPECT_GT(t.instances, 0u);
}

TEST(Shifted, StabilityDichotomy22) {
    auto rep = stability(2, 2, {2, 2}, kDefaultPrime, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.boundary_instances, 12u);
}

TEST(Schur, KLambdaAndGenerators) {
    EXPECT_TRUE(k_lambda_idempotents(2, {2, 2}).ok());
    EXPECT_TRUE(k_lambda_idempotents(1, {1, 1}).ok());
    EXPECT_TRUE(schur_generators_match(2, 2, {2, 2}).ok());
}

TEST(Schur, KLambdaIsDiagonal) {
    const int n = 2;
    const Composition lam{1, 1}, mu{2, 0};
    EXPECT_TRUE(k_lambda_value(lam, mu, n).is_zero());
    EXPECT_EQ(k_lambda_value(lam, lam, n), ParamPoly(1));
}

TEST(DoubleCentralizer, SmallestCase) {
    // W = (1-dim simple) + (regular module of H_{1,2}); End_H(W) has dim 1 + 1 + 1 + 2
    auto rep = double_centralizer(1, 2, {1, 1}, kDefaultPrime, 1);
    EXPECT_EQ(rep.dim_W, 3u);
    EXPECT_EQ(rep.dim_H, 2u);
    EXPECT_EQ(rep.commutant, 5u);
    EXPECT_EQ(rep.image_rho, 5u);
    EXPECT_EQ(rep.image_sigma, 2u);
    EXPECT_TRUE(rep.ok());
}

TEST(DoubleCentralizer, Case22) {
    auto rep = double_centralizer(2, 2, {2, 2}, kDefaultPrime, 1);
    EXPECT_EQ(rep.dim_W, 36u);
    EXPECT_EQ(rep.commutant, 210u);
    EXPECT_EQ(rep.image_rho, 210u);
    EXPECT_EQ(rep.image_sigma, 8u);
    EXPECT_TRUE(rep.ok());
}
