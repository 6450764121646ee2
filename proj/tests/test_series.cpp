#include "taut/hypergeometric.hpp"
#include "taut/partitions.hpp"
#include "taut/rational.hpp"
#include "taut/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace taut;

namespace {

Series univariate(int order) { return Series({"t"}, {{{1}, order}}); }

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("-13/30240")), "-13/30240");
    EXPECT_EQ(to_string(parse_rational("4/8")), "1/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, RandomArithmeticStaysReduced) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    Rational acc = 1;
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng);
        if (b == 0) b = 3;
        Rational q = rational(a, b);
        switch (i % 4) {
            case 0: acc += q; break;
            case 1: acc -= q; break;
            case 2: acc *= q == 0 ? Rational(1) : q; break;
            default: acc /= q == 0 ? Rational(2) : q;
        }
        ASSERT_TRUE(is_reduced(acc));
    }
}

TEST(SeriesA, Coefficients) {
    auto a = series_A(3);
    EXPECT_EQ(a.coeff({0}), 1);
    EXPECT_EQ(a.coeff({1}), 60);
    EXPECT_EQ(a.coeff({2}), 27720);
    Rational direct = Rational(factorial(18)) / Rational(factorial(9) * factorial(6));
    EXPECT_EQ(a.coeff({3}), direct);
    EXPECT_EQ(series_A(0).terms().size(), 1u);
}

TEST(SeriesB, Coefficients) {
    auto b = series_B(2);
    EXPECT_EQ(b.coeff({0}), -1);
    EXPECT_EQ(b.coeff({1}), 84);
    // H1(T) = -B(-T) has T^2 coefficient -32760
    EXPECT_EQ(-b.coeff({2}), -32760);
    auto h1 = h1_coefficients(2);
    EXPECT_EQ(h1[0], 1);
    EXPECT_EQ(h1[1], 84);
    EXPECT_EQ(h1[2], -32760);
    auto h0 = h0_coefficients(2);
    EXPECT_EQ(h0[1], -60);
    EXPECT_EQ(h0[2], 27720);
}

TEST(Identities, PixtonIdentity) {
    EXPECT_TRUE(check_pixton_identity(0));
    EXPECT_TRUE(check_pixton_identity(10));
    for (int n = 0; n <= 50; n += 7) EXPECT_TRUE(check_pixton_identity(n));
    EXPECT_TRUE(check_pixton_identity(50));
    auto b = series_B(5);
    b.add_term({3}, 1);
    EXPECT_FALSE(check_pixton_identity(series_A(5), b, 5));
}

TEST(Identities, Reflection) { EXPECT_TRUE(check_h_reflection(50)); }

TEST(Identities, HypergeometricOdes) {
    EXPECT_TRUE(check_hypergeometric_odes(1));
    EXPECT_TRUE(check_hypergeometric_odes(20));
    EXPECT_FALSE(check_hypergeometric_odes(series_A(22), series_A(22), 20));
}

TEST(SeriesOps, LogExp) {
    auto s = univariate(2);
    EXPECT_TRUE(log(s.constant(1)).is_zero());
    auto x = s.constant(1) + s.monomial({1}, 60) + s.monomial({2}, 27720);
    auto l = log(x);
    EXPECT_EQ(l.coeff({1}), 60);
    EXPECT_EQ(l.coeff({2}), 25920);
    EXPECT_EQ(exp(l), x);
    EXPECT_THROW(log(s.constant(2)), std::domain_error);
    EXPECT_THROW(exp(s.constant(1)), std::domain_error);
}

TEST(SeriesOps, RandomLogExpInverse) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        Series s({"x", "y"}, {{{1, 2}, 6}});
        Series f = s.empty_like();
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; 2 * j + i <= 6; ++j)
                if (i + j > 0) f.add_term({i, j}, rational(d(rng), 1 + (trial % 3)));
        EXPECT_EQ(log(exp(f)), f);
        auto g = f + s.constant(1);
        EXPECT_EQ(exp(log(g)), g);
    }
}

TEST(SeriesOps, InvolutiveExponents) {
    Series s({"z", "t"}, {{{0, 1}, 4}}, {true, false});
    auto z = s.variable(0);
    auto p = z * z * z;
    for (const auto& [e, c] : p.terms()) EXPECT_LE(e[0], 1);
    EXPECT_EQ(z * z, s.constant(1));
}

TEST(PsiFz, Shape) {
    auto psi = psi_fz(4, 4);
    const auto& vars = psi.variables();
    for (const auto& v : vars) {
        EXPECT_NE(v, "p2");
        EXPECT_NE(v, "p5");
    }
    // p = 0 slice is A
    auto a = series_A(4);
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(psi.coeff(fz_exponents(i, Partition{}, 4)), a.coeff({i}));
    EXPECT_EQ(psi.coeff(fz_exponents(0, Partition({1}), 4)), series_B(0).coeff({0}));
}

TEST(PsiCt, Shape) {
    auto psi = psi_ct(3, 3);
    std::vector<Rational> expect{1, 1, 3, 15};
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(psi.coeff(ct_exponents(i, Partition{}, 3)), expect[i]);
    EXPECT_EQ(psi.coeff(ct_exponents(0, Partition({1}), 3)), 1);
    EXPECT_EQ(psi.coeff(ct_exponents(1, Partition({1}), 3)), 0);
    EXPECT_EQ(psi.coeff(ct_exponents(1, Partition({2}), 3)), 1);
}

TEST(Constants, Values) {
    EXPECT_EQ(fz_constants(0, Partition{}), 0);
    EXPECT_EQ(fz_constants(1, Partition{}), 60);
    EXPECT_EQ(fz_constants(0, Partition({1})), -1);
    EXPECT_THROW(fz_constants(1, Partition({2})), std::invalid_argument);
    EXPECT_EQ(ct_constants(1, Partition{}), 1);
}

TEST(Partitions, Enumeration) {
    EXPECT_EQ(partitions(5).size(), 7u);
    EXPECT_EQ(partitions_at_most(2, 1).size(), 1u);
    EXPECT_EQ(partitions_at_most(1, 0).size(), 0u);
    EXPECT_EQ(partitions(0).size(), 1u);
    auto ps = partitions(4);
    EXPECT_EQ(ps.front().parts, std::vector<int>{4});
    EXPECT_EQ(ps.back().parts, (std::vector<int>{1, 1, 1, 1}));
}
