#include "taut/fz_relations.hpp"
#include "taut/hypergeometric.hpp"

#include <gtest/gtest.h>

using namespace taut;

namespace {

// Oracle: expand exp(-gamma) at p = 0 directly as a series in t with kappa
// monomials as coefficients, using only the constants C_r of the empty partition.
KappaPoly direct_p0(int d, const Rational& kappa0) {
    // polynomials in t with KappaPoly coefficients
    using TPoly = std::vector<KappaPoly>;
    TPoly gamma(d + 1);
    for (int r = 1; r <= d; ++r) gamma[r][{r}] = fz_constants(r, Partition{});
    // C_0 of the empty partition vanishes, so kappa_0 does not enter at p = 0
    EXPECT_EQ(fz_constants(0, Partition{}), 0);
    (void)kappa0;
    auto mul = [&](const TPoly& a, const TPoly& b) {
        TPoly r(d + 1);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                for (const auto& [ka, ca] : a[i])
                    for (const auto& [kb, cb] : b[j]) {
                        auto k = ka;
                        k.insert(k.end(), kb.begin(), kb.end());
                        std::sort(k.begin(), k.end());
                        r[i + j][k] += ca * cb;
                    }
        return r;
    };
    TPoly result(d + 1), term(d + 1);
    result[0][{}] = 1;
    term[0][{}] = 1;
    for (int m = 1; m <= d; ++m) {
        term = mul(term, gamma);
        for (int i = 0; i <= d; ++i)
            for (auto& [k, c] : term[i]) result[i][k] += c * (m % 2 ? -1 : 1) / Rational(factorial(m));
    }
    KappaPoly out;
    for (auto& [k, c] : result[d])
        if (c != 0) out[k] = c;
    return out;
}

}  // namespace

TEST(FZ, DirectExpansionOracle) {
    auto r = fz_relation(3, 2, Partition{});
    EXPECT_FALSE(r.is_zero());
    EXPECT_EQ(r.terms, direct_p0(2, 4));
    for (const auto& [k, c] : r.terms) {
        int deg = 0;
        for (int i : k) deg += i;
        EXPECT_EQ(deg, 2);
    }
}

TEST(FZ, Preconditions) {
    EXPECT_THROW(fz_relation(3, 1, Partition{}), std::invalid_argument);
    EXPECT_THROW(fz_relation(3, 2, Partition({2})), std::invalid_argument);
    EXPECT_THROW(fz_relation(10, 2, Partition{}), std::invalid_argument);
}

TEST(FZ, GenusEntersOnlyThroughKappa0) {
    Partition s({1});
    auto sym = relation_symbolic(Family::fz, 3, s);
    EXPECT_EQ(fz_relation(5, 3, s).terms, substitute_kappa0(sym, 8));
    EXPECT_EQ(fz_relation(7, 3, s).terms, substitute_kappa0(sym, 12));
}

TEST(FZ, ExcludedParityIsNotARelation) {
    // The excluded parity does not give the zero polynomial (at d = 1 the
    // extraction is -60 kappa_1 for every genus); in genus 4 degree 2 it would
    // even kill the socle, so the parity condition is essential.
    auto d1 = substitute_kappa0(relation_symbolic(Family::fz, 1, Partition{}), 4);
    EXPECT_EQ(d1, (KappaPoly{{{1}, Rational(-60)}}));
    auto rels = fz_relation_ideal(4, 2);
    auto m = relation_matrix(rels, 2);
    RowEchelon e(m.cols);
    for (const auto& r : m.rows) e.add(r);
    auto monos = kappa_monomials(2);
    SparseVector v;
    for (const auto& [k, c] : substitute_kappa0(relation_symbolic(Family::fz, 2, Partition{}), 6))
        v[static_cast<int>(std::find(monos.begin(), monos.end(), k) - monos.begin())] = c;
    EXPECT_FALSE(v.empty());
    EXPECT_FALSE(e.in_span(v));
    EXPECT_EQ(e.rank(), 1);
}

TEST(FZ, NoLowDegreeRelations) {
    for (int g = 4; g <= 12; ++g) {
        auto b = fz_betti(g, g / 3);
        for (int d = 0; d <= g / 3; ++d) EXPECT_EQ(b[d], static_cast<int>(partitions(d).size()));
    }
}

TEST(FZ, SmallGenusSocle) {
    for (int g = 4; g <= 8; ++g) {
        auto b = fz_betti(g, g - 1);
        EXPECT_EQ(b[g - 2], 1) << g;
        EXPECT_EQ(b[g - 1], 0) << g;
        for (int d = 0; d <= g - 2; ++d) EXPECT_EQ(b[d], b[g - 2 - d]) << g;
    }
}

TEST(FZ, GenerationByLowKappas) {
    for (int g = 4; g <= 9; ++g) {
        const int low = g / 3;
        auto rels = fz_relation_ideal(g, g - 2);
        for (int j = low + 1; j <= g - 2; ++j) {
            // kappa_j minus the span of low-kappa monomials must be in the relation span
            auto m = relation_matrix(rels, j);
            auto monos = kappa_monomials(j);
            RowEchelon e(m.cols);
            for (const auto& r : m.rows) e.add(r);
            for (std::size_t i = 0; i < monos.size(); ++i) {
                bool low_only = std::all_of(monos[i].begin(), monos[i].end(), [&](int x) { return x <= low; });
                if (low_only) e.add(SparseVector{{static_cast<int>(i), 1}});
            }
            int kj = static_cast<int>(std::find(monos.begin(), monos.end(), std::vector<int>{j}) - monos.begin());
            EXPECT_TRUE(e.in_span(SparseVector{{kj, 1}})) << "g=" << g << " j=" << j;
        }
    }
}

TEST(CT, Basics) {
    EXPECT_THROW(ct_relation(1, 1, 1, Partition({1})), std::invalid_argument);
    auto r = ct_relation(1, 1, 1, Partition{});
    EXPECT_FALSE(r.is_zero());
    EXPECT_EQ(ct_quotient_dim(1, 1, 1), 0);
    EXPECT_EQ(ct_quotient_dim(2, 1, 1), 1);
    EXPECT_EQ(ct_quotient_dim(2, 1, 2), 1);
    EXPECT_EQ(ct_quotient_dim(2, 1, 3), 0);
}

TEST(CT, Universality) {
    for (int g = 1; g <= 3; ++g)
        for (int n = 1; 2 * g - 2 + n <= 6; ++n)
            for (int d = 1; d <= 5; ++d)
                for (const auto& s : partitions_up_to(3)) {
                    if (!ct_valid(g, n, d, s)) continue;
                    EXPECT_EQ(ct_relation(g, n, d, s).terms, ct_relation(g - 1, n + 2, d, s).terms);
                }
}
