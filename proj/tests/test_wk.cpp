#include "taut/hypergeometric.hpp"
#include "taut/wk.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using namespace taut;

namespace {

Rational dfact(int k) {  // (2k+1)!!
    Integer r = 1;
    for (int i = 1; i <= 2 * k + 1; i += 2) r *= i;
    return Rational(r);
}

// Independent oracle: the DVV recursion on tau_{k+1}.
Rational dvv(int g, std::vector<int> ks) {
    static std::map<std::pair<int, std::vector<int>>, Rational> memo;
    const int n = static_cast<int>(ks.size());
    for (int k : ks)
        if (k < 0) return 0;
    if (g < 0 || n == 0 || 2 * g - 2 + n <= 0) return 0;
    if (std::accumulate(ks.begin(), ks.end(), 0) != 3 * g - 3 + n) return 0;
    std::sort(ks.rbegin(), ks.rend());
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return Rational(1, 24);
    auto key = std::make_pair(g, ks);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational r = 0;
    if (ks[0] == 0) {
        // string equation
        std::vector<int> rest(ks.begin() + 1, ks.end());
        for (std::size_t j = 0; j < rest.size(); ++j) {
            auto t = rest;
            --t[j];
            r += dvv(g, t);
        }
    } else {
        const int k = ks[0] - 1;
        std::vector<int> s(ks.begin() + 1, ks.end());
        Rational acc = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto t = s;
            t[j] = k + s[j];
            acc += dfact(k + s[j]) / dfact(s[j] - 1 >= 0 ? s[j] - 1 : -1) * dvv(g, t);
        }
        for (int a = 0; a <= k - 1; ++a) {
            int b = k - 1 - a;
            Rational w = dfact(a) * dfact(b) / 2;
            auto t = s;
            t.push_back(a);
            t.push_back(b);
            acc += w * dvv(g - 1, t);
            const int m = static_cast<int>(s.size());
            for (unsigned mask = 0; mask < (1u << m); ++mask)
                for (int g1 = 0; g1 <= g; ++g1) {
                    std::vector<int> i1{a}, i2{b};
                    for (int j = 0; j < m; ++j) (mask & (1u << j) ? i1 : i2).push_back(s[j]);
                    acc += w * dvv(g1, i1) * dvv(g - g1, i2);
                }
        }
        r = acc / dfact(k + 1);
    }
    memo[key] = r;
    return r;
}

}  // namespace

TEST(WK, WorkedValues) {
    EXPECT_EQ(descendent_integral(0, {0, 0, 0}), 1);
    EXPECT_EQ(descendent_integral(1, {1}), Rational(1, 24));
    EXPECT_EQ(descendent_integral(0, {0, 0, 1}), 0);
    EXPECT_EQ(descendent_integral(0, {0, 0, 0, 1}), 1);
    EXPECT_EQ(descendent_integral(2, {4}), Rational(1, 1152));
    EXPECT_THROW(descendent_integral(kWkMaxGenus + 1, {3 * kWkMaxGenus - 2}), std::out_of_range);
}

TEST(WK, MatchesDvvOracle) {
    auto t = build_wk_table(4, 6);
    for (const auto& [key, v] : t.entries) EXPECT_EQ(v, dvv(key.first, key.second)) << key.first;
}

TEST(WK, DimensionConstraint) {
    for (int g = 0; g <= 3; ++g)
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (int c = 0; c <= 6; ++c)
                    if (a + b + c != 3 * g) EXPECT_EQ(descendent_integral(g, {a, b, c}), 0);
}

TEST(WK, StringAndKdv) {
    auto t = build_wk_table(3, 9);
    EXPECT_TRUE(check_string(t));
    EXPECT_TRUE(check_kdv(t, 4));
    auto bad = t;
    bad.entries[{1, {1}}] += 1;
    EXPECT_FALSE(check_string(bad));
    WKTable empty;
    EXPECT_TRUE(check_string(empty));
    EXPECT_TRUE(check_kdv(empty, 3));
}

TEST(WK, Airy) {
    auto t = build_wk_table(2, 5);
    auto lhs = airy_specialize(t, 9);
    auto rhs = airy_target(9);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs.coeff({0}), 1);
    EXPECT_EQ(lhs.coeff({3}), -(Rational(1, 6) + Rational(1, 24)));
    EXPECT_EQ(lhs.coeff({3}), -Rational(720 / (6 * 2)) / 288);
    EXPECT_EQ(lhs.coeff({6}), series_A(2).coeff({2}) / (288 * 288));
    EXPECT_THROW(airy_specialize(build_wk_table(1, 3), 9), std::invalid_argument);
}
