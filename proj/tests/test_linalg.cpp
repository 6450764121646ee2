#include "taut/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace taut;

namespace {

int dense_rank(std::vector<std::vector<Rational>> a) {
    int rank = 0;
    const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a[r][c] != 0) {
                Rational f = a[r][c] / a[rank][c];
                for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

// Random matrix of prescribed rank at most k: products of random factors.
std::vector<std::vector<Rational>> random_matrix(std::mt19937& rng, int rows, int cols, int k) {
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<std::vector<Rational>> l(rows, std::vector<Rational>(k)), r(k, std::vector<Rational>(cols));
    for (auto& row : l)
        for (auto& x : row) x = rational(val(rng), 1 + std::abs(val(rng)));
    for (auto& row : r)
        for (auto& x : row) x = (val(rng) % 2 == 0) ? Rational(0) : Rational(val(rng));
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int t = 0; t < k; ++t) m[i][j] += l[i][t] * r[t][j];
    return m;
}

SparseMatrix to_sparse(const std::vector<std::vector<Rational>>& a, int cols) {
    SparseMatrix m(cols);
    for (const auto& row : a) {
        SparseVector v;
        for (int j = 0; j < cols; ++j)
            if (row[j] != 0) v[j] = row[j];
        m.add_row(v);
    }
    return m;
}

}  // namespace

TEST(Linalg, Identity) {
    SparseMatrix m(3);
    for (int i = 0; i < 3; ++i) m.add_row({{i, 1}});
    EXPECT_EQ(rank(m), 3);
    EXPECT_TRUE(kernel_basis(m).empty());
    EXPECT_EQ(quotient_dim(3, m), 0);
    EXPECT_THROW(quotient_dim(5, m), std::invalid_argument);
    EXPECT_EQ(quotient_dim(4, SparseMatrix(4)), 4);
}

TEST(Linalg, SpanMembership) {
    SparseMatrix m(3);
    m.add_row({{0, 1}, {1, 2}});
    m.add_row({{1, 1}, {2, -1}});
    EXPECT_TRUE(in_span({{0, 2}, {1, 5}, {2, -1}}, m));
    EXPECT_FALSE(in_span({{2, 1}}, m));
    EXPECT_TRUE(in_span({}, m));
}

TEST(Linalg, MatchesDenseOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dim(1, 40);
        int rows = dim(rng), cols = dim(rng), k = std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng);
        auto a = random_matrix(rng, rows, cols, k);
        auto m = to_sparse(a, cols);
        int rk = rank(m);
        EXPECT_EQ(rk, dense_rank(a));
        auto ker = kernel_basis(m);
        EXPECT_EQ(rk + static_cast<int>(ker.size()), rows);
        for (const auto& y : ker) {
            std::vector<Rational> prod(cols, 0);
            for (const auto& [i, c] : y)
                for (const auto& [j, x] : m.rows[i]) prod[j] += c * x;
            for (const auto& x : prod) EXPECT_EQ(x, 0);
        }
    }
}

TEST(Linalg, RankInvariantUnderRowOperations) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(rng, 15, 12, 6);
        int base = rank(to_sparse(a, 12));
        std::shuffle(a.begin(), a.end(), rng);
        for (auto& row : a)
            for (auto& x : row) x *= rational(3, 7);
        EXPECT_EQ(rank(to_sparse(a, 12)), base);
    }
}

TEST(Linalg, RowEchelonIncremental) {
    RowEchelon e(4);
    EXPECT_TRUE(e.add({{0, 2}, {3, 1}}));
    EXPECT_FALSE(e.add({{0, 4}, {3, 2}}));
    EXPECT_TRUE(e.add({{1, 1}}));
    EXPECT_EQ(e.rank(), 2);
    EXPECT_TRUE(e.in_span({{0, 1}, {1, 5}, {3, rational(1, 2)}}));
}

TEST(Linalg, RejectsColumnMismatch) {
    SparseMatrix m(2);
    EXPECT_THROW(m.add_row({{2, 1}}), std::out_of_range);
    RowEchelon e(2);
    EXPECT_THROW(e.add({{5, 1}}), std::out_of_range);
}
