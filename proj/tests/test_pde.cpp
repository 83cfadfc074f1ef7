#include <gtest/gtest.h>

#include <random>

#include "e7/pde.hpp"
#include "e7/rep.hpp"
#include "e7/singular.hpp"
#include "oracles.hpp"

namespace {

using namespace e7::pde;
using e7::poly::ConstDiffOp;

Polynomial x(int i) { return Polynomial::var(i); }

const ConstDiffOp& naive_dual() {
    static const ConstDiffOp d = dual_operator(e7::singular::solved_eta());
    return d;
}

const IndexedOperator& fast_dual() {
    static const IndexedOperator d(naive_dual());
    return d;
}

TEST(Dual, Examples) {
    auto d = dual_operator(x(1) * x(2));
    EXPECT_EQ(d.apply(x(1) * x(1) * x(2)), x(1) * 2);
    EXPECT_TRUE(d.apply(x(1) * x(1)).is_zero());
    EXPECT_EQ(IndexedOperator(d).apply(x(1) * x(1) * x(2) * x(2)), x(1) * x(2) * 4);
    EXPECT_EQ(naive_dual().order(), 4);
}

TEST(Dual, IndexedMatchesNaive) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int deg = 4 + trial % 3;
        auto f = e7::oracle::random_polynomial(rng, deg, 40, 56);
        EXPECT_EQ(fast_dual().apply(f), naive_dual().apply(f)) << trial;
    }
    auto g = e7::singular::solved_zeta1() * e7::singular::solved_zeta1();
    EXPECT_EQ(fast_dual().apply(g), naive_dual().apply(g));
    EXPECT_THROW(IndexedOperator(ConstDiffOp(x(1) + x(1) * x(2))), std::invalid_argument);
}

TEST(Dual, EtaGivesNonzeroConstant) {
    auto c = dual_of_eta();
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.degree(), 0);
    EXPECT_EQ(c.terms()[0].second, 105336);
    EXPECT_EQ(naive_dual().apply(e7::singular::solved_eta()), c);
}

TEST(Dual, LowOrderInputsVanish) {
    std::mt19937_64 rng(11);
    for (int d = 0; d < 4; ++d) EXPECT_TRUE(fast_dual().apply(e7::oracle::random_polynomial(rng, d, 20, 56)).is_zero());
}

TEST(Dual, CommutesWithTheAction) {
    // D is dual to an invariant, so D g = g D for every root operator g
    std::mt19937_64 rng(3);
    const auto& t = e7::rep::full_rep();
    for (int r = 1; r <= 7; ++r) {
        auto a = e7::roots::simple_root(r);
        for (const auto* g : {&t.raising.at(a), &t.lowering.at(a)}) {
            auto f = e7::oracle::random_polynomial(rng, 5, 60, 56);
            EXPECT_EQ(fast_dual().apply(g->apply(f)), g->apply(fast_dual().apply(f))) << r;
        }
    }
}

TEST(Annihilation, Examples) {
    EXPECT_TRUE(check_annihilation(0, 0, 4, 0).zero());
    EXPECT_TRUE(check_annihilation(1, 0, 0, 1).zero());
    EXPECT_TRUE(check_annihilation(2, 0, 0, 0).zero());
    EXPECT_TRUE(check_annihilation(0, 1, 0, 0).zero());
    auto r = check_annihilation(1, 1, 1, 0);
    EXPECT_EQ(r.degree, 7);
    EXPECT_TRUE(r.zero());
}

TEST(Annihilation, NaiveRouteAgrees) {
    using namespace e7::singular;
    auto f = solved_zeta1() * solved_theta();
    EXPECT_TRUE(naive_dual().apply(f).is_zero());
    auto g = solved_sigma() * x(1);
    EXPECT_TRUE(naive_dual().apply(g).is_zero());
}

TEST(Annihilation, EtaItselfIsNotAnnihilated) {
    EXPECT_FALSE(fast_dual().apply(e7::singular::solved_eta() * x(1)).is_zero());
}

TEST(Annihilation, BudgetRefusal) {
    EXPECT_THROW(check_annihilation(0, 0, 11, 0), BudgetExceeded);
    EXPECT_THROW(check_annihilation(3, 0, 0, 0, 5), BudgetExceeded);
    try {
        check_annihilation(0, 3, 0, 0);
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.degree(), 12);
    }
    EXPECT_THROW(check_annihilation(0, 0, 0, 2), std::invalid_argument);
}

TEST(Annihilation, Sweep) {
    auto r = annihilation_sweep(6);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front().id);
}

TEST(Audit, WeightShift) {
    auto r = weight_shift_audit();
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front().id);
    EXPECT_EQ(r.checks_run, 90u);
}

}  // namespace
