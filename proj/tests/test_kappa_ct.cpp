#include "taut/kappa_ct.hpp"

#include <gtest/gtest.h>

using namespace taut;

TEST(KappaCT, PartitionBasisExamples) {
    EXPECT_TRUE(partition_basis(1, 1, 1).empty());
    auto b = partition_basis(2, 1, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].parts, std::vector<int>({2}));
    EXPECT_EQ(ct_betti(1, 2, 1), 1);
    EXPECT_EQ(ct_betti(2, 1, 1), 1);
    EXPECT_EQ(ct_betti(2, 1, 3), 0);
    for (const auto& p : partition_basis(3, 2, 3)) {
        EXPECT_EQ(p.size(), 3);
        EXPECT_LE(p.length(), 2 * 3 - 2 + 2 - 3);
    }
}

TEST(KappaCT, SocleAndVanishing) {
    for (int g = 0; g <= 3; ++g)
        for (int n = 1; n <= 4; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            EXPECT_EQ(ct_betti(g, n, 2 * g - 3 + n), 1) << g << n;
            EXPECT_EQ(ct_betti(g, n, 2 * g - 2 + n), 0);
            EXPECT_EQ(ct_betti(g, n, 0), 1);
        }
}

TEST(KappaCT, BettiDependsOnlyOnEulerCharacteristic) {
    for (int g = 1; g <= 3; ++g)
        for (int n = 1; n <= 3; ++n)
            for (int d = 0; d <= 2 * g - 2 + n; ++d) EXPECT_EQ(ct_betti(g, n, d), ct_betti(g - 1, n + 2, d));
}

TEST(KappaCT, RelationsCutOutPartitionBasis) {
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 4; ++n) {
            if (2 * g - 2 + n <= 0 || 2 * g - 2 + n > 5) continue;
            for (int d = 0; d <= 2 * g - 2 + n; ++d) {
                EXPECT_EQ(ct_quotient_dim(g, n, d), ct_betti(g, n, d)) << g << " " << n << " " << d;
                auto m = relation_matrix(ct_relations_in_degree(g, n, d), d);
                EXPECT_EQ(rank(m), static_cast<int>(kappa_monomials(d).size()) - ct_betti(g, n, d));
            }
        }
}

TEST(KappaCT, Transport) {
    auto r = ct_relation(2, 1, 3, Partition{});
    auto t = genus0_transport(r);
    EXPECT_EQ(t.g, 0);
    EXPECT_EQ(t.n, 5);
    EXPECT_EQ(t.terms, r.terms);
    EXPECT_EQ(t.terms, ct_relation(0, 5, 3, Partition{}).terms);
    r.n = 0;
    EXPECT_THROW(genus0_transport(r), std::invalid_argument);
    EXPECT_THROW(partition_basis(2, 0, 1), std::invalid_argument);
}

TEST(KappaCT, SurjectionReportShape) {
    auto rows = n0_surjection_report(3);
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& row : rows) EXPECT_GE(row.genus0_betti, 0);
    EXPECT_EQ(rows[0].genus0_betti, 1);
}
