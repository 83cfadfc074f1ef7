#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "e7/exact.hpp"
#include "oracles.hpp"

namespace {

using e7::exact::make_rational;
using e7::exact::Rational;
using e7::exact::SparseMatrix;

SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool kills(const SparseMatrix& m, const std::vector<Rational>& v) {
    auto r = m.multiply(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

TEST(Rational, CanonicalForm) {
    Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(e7::exact::to_string(q), "-3/2");
    EXPECT_EQ(e7::exact::parse_rational("10/4"), make_rational(5, 2));
    EXPECT_EQ(e7::exact::parse_rational("-7"), Rational(-7));
    EXPECT_THROW(e7::exact::parse_rational("1/0"), std::invalid_argument);
}

TEST(SparseMatrix, SetZeroErases) {
    SparseMatrix m(2, 2);
    m.set(0, 1, 3);
    m.add(0, 1, -3);
    EXPECT_EQ(m.nonzeros(), 0u);
    m.set(1, 0, 2);
    m.set(1, 0, 0);
    EXPECT_EQ(m.nonzeros(), 0u);
}

TEST(ExactRank, Identity) { EXPECT_EQ(e7::exact::exact_rank(identity(3)), 3u); }

TEST(ExactRank, AllOnes) {
    SparseMatrix m(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.set(r, c, 1);
    EXPECT_EQ(e7::exact::exact_rank(m), 1u);
}

TEST(ExactRank, RandomAgainstDenseOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = e7::oracle::random_matrix(20, 30, rng, -9, 9, trial % 2 ? 0.15 : 0.5);
        EXPECT_EQ(e7::exact::exact_rank(m), e7::oracle::dense_rank(e7::oracle::to_dense(m))) << trial;
    }
}

TEST(ExactRank, RankDeficientAgainstDenseOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        // product of 25x6 and 6x25 integer matrices has rank <= 6
        auto a = e7::oracle::random_matrix(25, 6, rng, -4, 4, 0.7);
        auto b = e7::oracle::random_matrix(6, 25, rng, -4, 4, 0.7);
        SparseMatrix p(25, 25);
        for (std::size_t r = 0; r < 25; ++r)
            for (const auto& [k, v] : a.row(r))
                for (const auto& [c, w] : b.row(k)) p.add(r, c, v * w);
        std::size_t rank = e7::exact::exact_rank(p);
        EXPECT_LE(rank, 6u);
        EXPECT_EQ(rank, e7::oracle::dense_rank(e7::oracle::to_dense(p)));
    }
}

TEST(ExactNullspace, SingleEquation) {
    SparseMatrix m(1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    auto ns = e7::exact::exact_nullspace(m);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (std::vector<Rational>{1, -1}));
}

TEST(ExactNullspace, IdentityHasTrivialKernel) { EXPECT_TRUE(e7::exact::exact_nullspace(identity(5)).empty()); }

TEST(ExactNullspace, RankNullityAndAnnihilation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = e7::oracle::random_matrix(15, 25, rng);
        auto ns = e7::exact::exact_nullspace(m);
        EXPECT_EQ(ns.size() + e7::exact::exact_rank(m), 25u);
        for (const auto& v : ns) {
            EXPECT_TRUE(kills(m, v));
            auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
            ASSERT_NE(first, v.end());
            EXPECT_EQ(*first, 1);
        }
    }
}

TEST(ExactNullspace, OrderedByFreeColumn) {
    // x0 + x2 = 0, x1 + x3 = 0: free columns 2 and 3
    SparseMatrix m(2, 4);
    m.set(0, 0, 1);
    m.set(0, 2, 1);
    m.set(1, 1, 1);
    m.set(1, 3, 1);
    auto ns = e7::exact::exact_nullspace(m);
    ASSERT_EQ(ns.size(), 2u);
    EXPECT_EQ(ns[0], (std::vector<Rational>{1, 0, -1, 0}));
    EXPECT_EQ(ns[1], (std::vector<Rational>{0, 1, 0, -1}));
}

TEST(ExactNullspace, InsertionOrderIndependent) {
    std::mt19937_64 rng(5);
    auto m = e7::oracle::random_matrix(12, 18, rng);
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) entries.emplace_back(r, c, v);
    std::shuffle(entries.begin(), entries.end(), rng);
    SparseMatrix n(12, 18);
    for (const auto& [r, c, v] : entries) n.set(r, c, v);
    EXPECT_EQ(e7::exact::exact_nullspace(m), e7::exact::exact_nullspace(n));
}

TEST(ExactNullspace, RowOrderIndependent) {
    std::mt19937_64 rng(9);
    auto m = e7::oracle::random_matrix(10, 16, rng);
    SparseMatrix n(10, 16);
    for (std::size_t r = 0; r < 10; ++r)
        for (const auto& [c, v] : m.row(r)) n.set(9 - r, c, v);
    EXPECT_EQ(e7::exact::exact_nullspace(m), e7::exact::exact_nullspace(n));
}

TEST(ExactSolve, ConsistentAndInconsistent) {
    SparseMatrix m(2, 2);
    m.set(0, 0, 2);
    m.set(1, 0, 4);
    m.set(1, 1, 1);
    auto x = e7::exact::exact_solve(m, {1, 3});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.multiply(*x), (std::vector<Rational>{1, 3}));
    SparseMatrix s(2, 1);
    s.set(0, 0, 1);
    s.set(1, 0, 1);
    EXPECT_FALSE(e7::exact::exact_solve(s, {1, 2}).has_value());
}

TEST(ReducedEchelon, PivotsAreUnit) {
    std::mt19937_64 rng(13);
    auto m = e7::oracle::random_matrix(8, 12, rng, -20, 20, 0.6);
    auto e = e7::exact::reduced_echelon(m);
    ASSERT_EQ(e.pivot_cols.size(), e.rows.size());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        EXPECT_EQ(e.rows[k].front().first, e.pivot_cols[k]);
        EXPECT_EQ(e.rows[k].front().second, 1);
        for (std::size_t j = 0; j < e.rows.size(); ++j) {
            if (j == k) continue;
            for (const auto& [c, v] : e.rows[j]) EXPECT_NE(c, e.pivot_cols[k]);
        }
    }
    EXPECT_TRUE(std::is_sorted(e.pivot_cols.begin(), e.pivot_cols.end()));
}

}  // namespace
