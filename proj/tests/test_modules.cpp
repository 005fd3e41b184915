#include <gtest/gtest.h>

#include "akschur/combinatorics.hpp"
#include "akschur/modules.hpp"
#include "akschur/suites.hpp"

using namespace akschur;

namespace {

long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

long long multinomial(const Composition& mu) {
    long long d = factorial(composition_size(mu));
    for (int x : mu) d /= factorial(x);
    return d;
}

}  // namespace

TEST(Combinatorics, CompositionCountIsStarsAndBars) {
    for (int n = 0; n <= 4; ++n)
        for (int m = 1; m <= 6; ++m)
            EXPECT_EQ(static_cast<long long>(enumerate_compositions(n, m).size()), binomial(n + m - 1, m - 1));
    EXPECT_EQ(enumerate_multicompositions(3, {3, 3}).size(), 56u);
    EXPECT_EQ(enumerate_multicompositions(2, {2, 2}).size(), 10u);
}

TEST(Combinatorics, DistinguishedRepresentatives) {
    CosetData cd({2, 1});
    EXPECT_EQ(cd.representatives().size(), 3u);
    for (const Composition& mu : std::vector<Composition>{{1, 1, 1}, {3}, {2, 0, 1}, {1, 2, 1}}) {
        CosetData c(mu);
        EXPECT_EQ(c.num_representatives(), multinomial(mu));
        EXPECT_EQ(static_cast<long long>(c.parabolic().size()) * c.num_representatives(),
                  factorial(composition_size(mu)));
        for (const auto& y : c.representatives()) EXPECT_TRUE(c.is_distinguished(y));
    }
}

TEST(Combinatorics, ProfileAndBoundary) {
    MultiComposition mu({2, 2}, {1, 0, 1, 1});
    auto pr = profile(mu);
    EXPECT_EQ(pr.N, (std::vector<int>{0, 1, 1, 2, 3}));
    EXPECT_EQ(pr.a, (std::vector<int>{0, 1, 3}));
    EXPECT_EQ(pr.c, (std::vector<int>{0, 1, 2, 2}));
    EXPECT_FALSE(mu.boundary(1).has_value());
    ASSERT_TRUE(mu.boundary(2).has_value());
    EXPECT_EQ(*mu.boundary(2), 1);
    EXPECT_FALSE(mu.boundary(3).has_value());
    EXPECT_EQ(mu.xi(1, 2), 3);
}

TEST(Modules, ExpectedDimensions) {
    // |S^mu| prod c_j for the quotient and |S^mu| r^n for the tilde module
    MultiComposition mu({2, 2}, {1, 0, 1, 1});
    EXPECT_EQ(expected_dim(mu, ModuleKind::quotient, 2), 6 * 1 * 2 * 2);
    EXPECT_EQ(expected_dim(mu, ModuleKind::tilde, 2), 6 * 8);
}

TEST(Modules, DefiningRelations22) {
    auto rep = defining_relations(2, 2, {2, 2}, kDefaultPrime, 1);
    EXPECT_EQ(rep.dim_H, 8);
    EXPECT_EQ(rep.weights.size(), 10u);
    EXPECT_TRUE(rep.ok());
    for (const auto& w : rep.weights) {
        EXPECT_TRUE(w.kills_relations) << w.mu.to_string();
        for (auto d : w.dim_M) EXPECT_EQ(d, w.expected_quotient) << w.mu.to_string();
        for (auto d : w.dim_Mt) EXPECT_EQ(d, w.expected_tilde) << w.mu.to_string();
    }
}

TEST(Modules, WeightSpaceTotalDimension) {
    // sum over weights of |S^mu| prod c_j at (1,2,(1,1)): v_1 (c=1) plus v_2 (c=2)
    AKAlgebra<Fp> A(point_params(1, 2, specialization_points(kDefaultPrime, 1)[0]));
    RightRegular R(A);
    WeightSpace W(R, {1, 1}, ModuleKind::quotient);
    EXPECT_EQ(W.dim(), 3u);
    EXPECT_EQ(W.num_blocks(), 2u);
}
