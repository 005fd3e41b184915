#include <gtest/gtest.h>

#include <random>

#include "akschur/param_poly.hpp"
#include "akschur/prime_field.hpp"

using namespace akschur;

namespace {

ParamPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), var(0, kNumVars - 1), len(0, 4);
    ParamPoly p;
    for (int t = len(rng); t > 0; --t) p += ParamPoly(coef(rng)) * ParamPoly::var(var(rng), ex(rng));
    return p;
}

}  // namespace

TEST(ParamPoly, LaurentInverse) {
    EXPECT_EQ(qpow(3) * qpow(-3), ParamPoly(1));
    EXPECT_EQ(Qvar(2).unit_inverse() * Qvar(2), ParamPoly(1));
    EXPECT_TRUE((qvar() - qvar()).is_zero());
}

TEST(ParamPoly, QuantumIntegers) {
    EXPECT_EQ(qint(1), ParamPoly(1));
    EXPECT_EQ(qint(2), qpow(1) + qpow(-1));
    EXPECT_EQ(qint(3), qpow(2) + ParamPoly(1) + qpow(-2));
    EXPECT_EQ(qint(-2), -qint(2));
    EXPECT_EQ(qdelta() * qint(4), qpow(4) - qpow(-4));
}

TEST(ParamPoly, DivideExact) {
    auto num = qint(4) * qint(3);
    auto quo = num.divide_exact(qint(2));
    ASSERT_TRUE(quo.has_value());
    EXPECT_EQ(*quo * qint(2), num);
    EXPECT_FALSE(qint(3).divide_exact(qint(2)).has_value());
}

TEST(ParamPoly, SpecializationIsRingHomomorphism) {
    std::mt19937_64 rng(7);
    const auto pts = specialization_points(kDefaultPrime, 3);
    ASSERT_EQ(pts.size(), 3u);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng);
        for (const auto& pt : pts) {
            EXPECT_EQ((a * b).specialize(pt), a.specialize(pt) * b.specialize(pt));
            EXPECT_EQ((a + b).specialize(pt), a.specialize(pt) + b.specialize(pt));
        }
    }
}

TEST(ParamPoly, RingAxioms) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(ParamPoly, SubstituteQOne) {
    auto p = qint(3) * Qvar(0);
    EXPECT_EQ(p.substitute(var_q(), ParamPoly(1)), ParamPoly(3) * Qvar(0));
}

TEST(PrimeField, InverseAndPowers) {
    const std::uint64_t p = kDefaultPrime;
    Fp a = Fp::from_int(123456789, p);
    EXPECT_EQ(a * a.inv(), Fp::from_int(1, p));
    EXPECT_EQ(Fp::from_int(-1, p) + Fp::from_int(1, p), Fp::from_int(0, p));
}
