#include <gtest/gtest.h>

#include <random>
#include <set>

#include "e7/data.hpp"
#include "e7/roots.hpp"
#include "oracles.hpp"

namespace {

using namespace e7::roots;

TEST(Gram, DynkinEdges) {
    const auto& g = gram();
    std::set<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            int want = i == j ? 2 : (edges.count({std::min(i, j), std::max(i, j)}) ? -1 : 0);
            EXPECT_EQ(g[i - 1][j - 1], want) << i << "," << j;
        }
}

TEST(Inner, Examples) {
    EXPECT_EQ(inner(simple_root(1), simple_root(1)), 2);
    EXPECT_EQ(inner(simple_root(1), simple_root(2)), 0);
    EXPECT_EQ(inner(simple_root(1), simple_root(3)), -1);
}

TEST(EnumerateRoots, CountsMatchReflectionOracle) {
    auto e8 = enumerate_roots(System::E8);
    auto e7 = enumerate_roots(System::E7);
    EXPECT_EQ(e8.size(), 240u);
    EXPECT_EQ(e7.size(), 126u);
    auto closure8 = e7::oracle::reflection_closure(8);
    auto closure7 = e7::oracle::reflection_closure(7);
    EXPECT_EQ(std::set<RootVec>(e8.begin(), e8.end()), closure8);
    EXPECT_EQ(std::set<RootVec>(e7.begin(), e7.end()), closure7);
    EXPECT_TRUE(std::is_sorted(e8.begin(), e8.end()));
}

TEST(EnumerateRoots, HighestRootHasCoefficientSix) {
    RootVec theta = {2, 3, 4, 6, 5, 4, 3, 2};
    EXPECT_TRUE(is_root(theta));
    int mx = 0;
    for (const auto& r : enumerate_roots(System::E8))
        for (int c : r) mx = std::max(mx, std::abs(c));
    EXPECT_EQ(mx, 6);
}

TEST(PositiveRoots, NegationSplitsExactly) {
    auto all = enumerate_roots(System::E8);
    std::set<RootVec> s(all.begin(), all.end());
    std::size_t pos = 0;
    for (const auto& r : all) {
        EXPECT_TRUE(s.count(neg(r)));
        EXPECT_NE(is_positive(r), is_positive(neg(r)));
        pos += is_positive(r);
        // a positive root has all coefficients >= 0
        if (is_positive(r)) {
            for (int c : r) EXPECT_GE(c, 0);
        }
    }
    EXPECT_EQ(pos, 120u);
    EXPECT_EQ(positive_roots(System::E7).size(), 63u);
}

TEST(PositiveRoots, MatchTranscribedLists) {
    // E7 positive roots: the roots labelling the transcribed raising operators.
    std::set<RootVec> listed;
    for (const auto& rec : e7::data::printed_raising_operators()) {
        RootVec r{};
        for (int i = 0; i < 7; ++i) r[i] = rec.root[i];
        listed.insert(r);
    }
    auto p7 = positive_roots(System::E7);
    EXPECT_EQ(listed, std::set<RootVec>(p7.begin(), p7.end()));
    // Positive E8 roots outside E7: the 56 basis roots plus the highest root.
    std::set<RootVec> outside;
    const auto& b = e7::data::basis_roots();
    for (int i = 1; i <= 56; ++i) outside.insert(b[i]);
    outside.insert({2, 3, 4, 6, 5, 4, 3, 2});
    std::set<RootVec> want;
    for (const auto& r : positive_roots(System::E8))
        if (r[7] != 0) want.insert(r);
    EXPECT_EQ(outside, want);
    EXPECT_EQ(want.size(), 57u);
}

TEST(Cocycle, Examples) {
    RootVec zero{};
    EXPECT_EQ(cocycle_F(simple_root(1), simple_root(1)), -1);
    EXPECT_EQ(cocycle_F(simple_root(1), simple_root(3)), 1);
    EXPECT_EQ(cocycle_F(simple_root(3), simple_root(1)), -1);
    for (const auto& b : enumerate_roots(System::E8)) EXPECT_EQ(cocycle_F(zero, b), 1);
}

TEST(Cocycle, SelfValueIsMinusOneOnRoots) {
    for (const auto& a : enumerate_roots(System::E8)) EXPECT_EQ(cocycle_F(a, a), -1);
}

TEST(Cocycle, Bimultiplicative) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 200; ++t) {
        RootVec a, b, d;
        for (int i = 0; i < 8; ++i) {
            a[i] = c(rng);
            b[i] = c(rng);
            d[i] = c(rng);
        }
        EXPECT_EQ(cocycle_F(add(a, b), d), cocycle_F(a, d) * cocycle_F(b, d));
        EXPECT_EQ(cocycle_F(a, add(b, d)), cocycle_F(a, b) * cocycle_F(a, d));
    }
}

TEST(Cocycle, AntisymmetricOnRootSums) {
    auto all = enumerate_roots(System::E8);
    std::size_t pairs = 0;
    for (const auto& a : all)
        for (const auto& b : all)
            if (is_root(add(a, b))) {
                ++pairs;
                EXPECT_EQ(cocycle_F(a, b), -cocycle_F(b, a));
            }
    // each root has 56 partners with (a, b) = -1
    EXPECT_EQ(pairs, 240u * 56u);
}

TEST(Cocycle, CommutationSign) {
    // F(a, b) F(b, a)^{-1} = (-1)^{(a, b)}
    auto all = enumerate_roots(System::E8);
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 5) {
            int s = (inner(all[i], all[j]) % 2 == 0) ? 1 : -1;
            EXPECT_EQ(cocycle_F(all[i], all[j]) * cocycle_F(all[j], all[i]), s);
        }
}

TEST(FundamentalWeights, Expansions) {
    const auto& fw = fundamental_weights_e7();
    ASSERT_EQ(fw.size(), 7u);
    std::array<int, 7> l1 = {2, 2, 3, 4, 3, 2, 1};
    for (int j = 0; j < 7; ++j) EXPECT_EQ(fw[0].root[j], l1[j]);
    std::array<int, 7> l7 = {2, 3, 4, 6, 5, 4, 3};
    for (int j = 0; j < 7; ++j) EXPECT_EQ(fw[6].root[j], e7::exact::make_rational(l7[j], 2));
}

TEST(FundamentalWeights, DualToSimpleRoots) {
    const auto& fw = fundamental_weights_e7();
    const auto& g = gram();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            e7::exact::Rational s = 0;
            for (int k = 0; k < 7; ++k) s += fw[i].root[k] * g[k][j];
            EXPECT_EQ(s, i == j ? 1 : 0);
        }
}

TEST(Weights, RootWeightRoundTrip) {
    for (const auto& a : enumerate_roots(System::E7)) {
        auto w = weight_of_root(a);
        for (int j = 0; j < 7; ++j) EXPECT_EQ(w.root[j], a[j]);
    }
    EXPECT_TRUE(weight_from_fund({1, 0, 0, 0, 0, 0, 0}).dominant());
    EXPECT_FALSE(weight_from_fund({1, 0, -1, 0, 0, 0, 0}).dominant());
}

TEST(Weights, InnerProduct) {
    const auto& fw = fundamental_weights_e7();
    // (l7, l7) = 3/2 and (l1, l1) = 2 for E7
    EXPECT_EQ(weight_inner(fw[6], fw[6]), e7::exact::make_rational(3, 2));
    EXPECT_EQ(weight_inner(fw[0], fw[0]), 2);
}

}  // namespace
