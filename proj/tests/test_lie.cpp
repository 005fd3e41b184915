#include <gtest/gtest.h>

#include "akschur/loop_lie.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

TEST(LoopLie, BracketOfCartanAndRoot) {
    // [E_11 t - E_22 t, E_12 t^2] = 2 E_12 t^3
    EXPECT_EQ(bracket(loop_H(1, 1), loop_E(1, 2)), ParamPoly(2) * loop_E(1, 3));
    EXPECT_EQ(bracket(loop_E(1, 0), loop_F(1, 0)), loop_H(1, 0));
    EXPECT_TRUE(bracket(loop_E(1, 0), loop_E(1, 5)).is_zero());
}

TEST(LoopLie, BracketIsAntisymmetric) {
    auto x = loop_E(1, 2) + ParamPoly(3) * loop_H(2, -1);
    auto y = loop_F(2, 1) + eta(1) * loop_E(2, 0);
    EXPECT_EQ(bracket(x, y), ParamPoly(-1) * bracket(y, x));
}

TEST(LoopLie, ShiftedEmbeddingOfF) {
    ShiftedLoop L(2, {1});
    const ParamPoly c = -eta(1).unit_inverse();
    EXPECT_EQ(L.shift_coeff(1), c);
    EXPECT_EQ(L.iota(LieGen::F, 1, 0), loop_F(1, 0) + c * loop_F(1, 1));
    EXPECT_EQ(bracket(L.iota(LieGen::E, 1, 0), L.iota(LieGen::F, 1, 0)), loop_H(1, 0) + c * loop_H(1, 1));
    ShiftedLoop L0(2, {0});
    EXPECT_EQ(L0.iota(LieGen::F, 1, 3), loop_F(1, 3));
}

TEST(LoopLie, Zeta) {
    EXPECT_EQ(zeta(3, 6), 2);
    EXPECT_EQ(zeta(3, -7), 2);
    EXPECT_EQ(zeta(2, 1), 0);
    EXPECT_EQ(zeta(1, -4), 4);
    EXPECT_EQ(zeta(0, 9), 0);
    EXPECT_THROW(zeta(-1, 2), std::invalid_argument);
}

TEST(LoopLie, BasisWindowM2) {
    auto rep = lie_basis_window(2, {1}, 3);
    EXPECT_EQ(rep.expected, 21u);
    EXPECT_EQ(rep.rank, 21u);
    EXPECT_TRUE(rep.ok());
}

TEST(LoopLie, BasisWindowM4) {
    auto rep = lie_basis_window(4, {0, 1, 0}, 3);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.rank, rep.expected);
}

TEST(LoopLie, Examples) { EXPECT_TRUE(zeta_examples().ok()); }

class LieRelationsSweep : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(LieRelationsSweep, Hold) {
    const auto& b = GetParam();
    auto t = lie_relations(static_cast<int>(b.size()) + 1, b, 2);
    EXPECT_TRUE(t.ok()) << (t.failures.empty() ? "" : t.failures.front());
    EXPECT_GT(t.instances, 0u);
}

INSTANTIATE_TEST_SUITE_P(Shifts, LieRelationsSweep,
                         ::testing::Values(std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{1, 0},
                                           std::vector<int>{1, 1}, std::vector<int>{0, 1, 0}, std::vector<int>{1, 0, 1}));

TEST(LoopLie, JacobiProperty) {
    for (int m = 2; m <= 4; ++m) {
        auto t = lie_jacobi(m, 100, 3, 42 + static_cast<std::uint64_t>(m));
        EXPECT_TRUE(t.ok()) << m;
        EXPECT_EQ(t.instances > 0, true);
    }
}

class CartanTranslationProperty : public ::testing::TestWithParam<int> {};

TEST_P(CartanTranslationProperty, PhiPsiInverse) {
    auto t = cartan_translation(GetParam(), 6);
    EXPECT_TRUE(t.ok()) << (t.failures.empty() ? "" : t.failures.front());
}

INSTANTIATE_TEST_SUITE_P(Shifts, CartanTranslationProperty, ::testing::Values(0, 1, 2, 3));
