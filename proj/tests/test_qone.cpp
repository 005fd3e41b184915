#include <gtest/gtest.h>

#include "akschur/qone.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

TEST(QOne, SpaceDimension) {
    QOneSpace V({1, 1});
    EXPECT_EQ(V.dim(), 3u);
    EXPECT_EQ(V.c(1), 1);
    EXPECT_EQ(V.c(2), 2);
    EXPECT_EQ(V.boundary(1), 1);
    QOneSpace W({2, 2});
    EXPECT_EQ(W.dim(), 6u);
    EXPECT_EQ(W.boundary(1), 0);
    EXPECT_EQ(W.boundary(2), 1);
    EXPECT_EQ(QOneTensor(W, 2).dim(), 36u);
}

TEST(QOne, BoundaryFExample) {
    // f_{1,0} v_1 = v_2 - Q_1^{-1} v_2 x
    QOneSpace V({1, 1});
    auto out = V.act(QOneGen::F, 1, 0, V.index(1, 0));
    QOneSpace::SiteVec expect{{V.index(2, 0), ParamPoly(1)}, {V.index(2, 1), -Qvar(1).unit_inverse()}};
    EXPECT_EQ(out, expect);
}

TEST(QOne, CyclotomicReduction) {
    // on v_2 (c = 2): x^2 = (Q_0 + Q_1) x - Q_0 Q_1, and x x^{-1} = 1
    QOneSpace V({1, 1});
    auto x2 = V.power(2, 2);
    EXPECT_EQ(x2[0], -(Qvar(0) * Qvar(1)));
    EXPECT_EQ(x2[1], Qvar(0) + Qvar(1));
    for (int e = -3; e <= 3; ++e) EXPECT_EQ(V.times_x(2, V.times_x_inv(2, V.power(2, e))), V.power(2, e)) << e;
}

TEST(QOne, TheoremSmall) {
    auto rep = q_one_theorem(1, {1, 1}, kDefaultPrime, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.commutant, 5u);
}

TEST(QOne, Theorem22) {
    auto rep = q_one_theorem(2, {2, 2}, kDefaultPrime, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.commutant, 210u);
    EXPECT_EQ(rep.image_rho, 210u);
    EXPECT_EQ(rep.image_sigma, 8u);
    EXPECT_EQ(rep.dim_H, 8u);
    // the printed h_{i,1} formula with the (mu_i - mu_{i+1}) factor does not match the action
    EXPECT_FALSE(rep.printed_h1_matches);
}
