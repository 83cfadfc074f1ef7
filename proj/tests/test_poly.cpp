#include <gtest/gtest.h>

#include <random>

#include "e7/poly.hpp"
#include "e7/rep.hpp"
#include "e7/zeta.hpp"
#include "oracles.hpp"

namespace {

using namespace e7::poly;
using e7::exact::make_rational;

Polynomial X(int i) { return Polynomial::var(i); }

TEST(Polynomial, RingExamples) {
    EXPECT_EQ((X(1) + X(2)) * (X(1) - X(2)), X(1) * X(1) - X(2) * X(2));
    Polynomial f = X(3) * X(7) * 5 + X(1);
    EXPECT_TRUE((f + f * -1).is_zero());
    EXPECT_EQ(to_string(Polynomial()), "0");
    EXPECT_EQ(Polynomial(1).degree(), 0);
}

TEST(Polynomial, GradedLexOrder) {
    Polynomial f = parse_polynomial("+x2*x3 +x1^2 +x56 +x1*x56");
    std::vector<std::string> got;
    for (const auto& [m, c] : f.terms()) got.push_back(m.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"x1^2", "x1*x56", "x2*x3", "x56"}));
}

TEST(Polynomial, ProductMatchesNaiveOracle) {
    const auto& z = e7::zeta::zeta_basis();
    Polynomial p = poly_mul(z[1], z[19]);
    EXPECT_EQ(e7::oracle::exponent_map(p), e7::oracle::naive_product(z[1], z[19]));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        auto a = e7::oracle::random_polynomial(rng, 2, 30, 12);
        auto b = e7::oracle::random_polynomial(rng, 3, 30, 12);
        EXPECT_EQ(e7::oracle::exponent_map(a * b), e7::oracle::naive_product(a, b));
    }
}

TEST(Polynomial, TextRoundTrip) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto f = e7::oracle::random_polynomial(rng, 1 + t % 4, 25) * make_rational(3, 7);
        EXPECT_EQ(parse_polynomial(to_string(f)), f);
    }
    EXPECT_EQ(to_string(parse_polynomial("-1/2*x1^2*x17 +x3")), "-1/2*x1^2*x17 +x3");
    EXPECT_EQ(parse_polynomial("+1*x4"), X(4));
    EXPECT_ANY_THROW(parse_polynomial("+x57"));
}

TEST(LinDiffOp, ApplyExamples) {
    EXPECT_EQ(apply_linop(LinDiffOp::single(1, 2), X(2)), X(1));
    EXPECT_EQ(apply_linop(e7::rep::simple_raising(7), X(2)), X(1));
    EXPECT_EQ(apply_linop(e7::rep::simple_raising(1), X(8)), X(6) * -1);
    // exponent multiplies
    EXPECT_EQ(apply_linop(LinDiffOp::single(1, 2), X(2) * X(2)), X(1) * X(2) * 2);
}

TEST(LinDiffOp, Derivation) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto op = e7::oracle::random_linop(rng, 10);
        auto f = e7::oracle::random_polynomial(rng, 2, 8);
        auto g = e7::oracle::random_polynomial(rng, 3, 8);
        EXPECT_EQ(op.apply(f * g), op.apply(f) * g + f * op.apply(g));
    }
}

TEST(LinDiffOp, PreservesDegree) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto op = e7::oracle::random_linop(rng, 40);
        auto f = e7::oracle::random_polynomial(rng, 4, 20);
        auto g = op.apply(f);
        if (!g.is_zero()) {
            EXPECT_TRUE(g.is_homogeneous());
            EXPECT_EQ(g.degree(), 4);
        }
    }
}

TEST(Commutator, Examples) {
    EXPECT_EQ(commutator(LinDiffOp::single(1, 2), LinDiffOp::single(2, 3)), LinDiffOp::single(1, 3));
    auto a = e7::rep::simple_raising(4);
    EXPECT_TRUE(commutator(a, a).is_zero());
}

TEST(Commutator, LeibnizConsistency) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto a = e7::oracle::random_linop(rng, 12);
        auto b = e7::oracle::random_linop(rng, 12);
        auto f = e7::oracle::random_polynomial(rng, 3, 10);
        EXPECT_EQ(commutator(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
    }
}

TEST(LinDiffOp, TextRoundTrip) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto op = e7::oracle::random_linop(rng, 15);
        EXPECT_EQ(parse_linop(to_string(op)), op);
    }
    EXPECT_EQ(to_string(LinDiffOp::single(6, 8, -1)), "-x6*d8");
}

TEST(Transpose, Examples) {
    EXPECT_EQ(transpose_tau(LinDiffOp::single(1, 2)), LinDiffOp::single(2, 1));
    auto a = e7::rep::simple_raising(3);
    EXPECT_EQ(transpose_tau(transpose_tau(a)), a);
}

TEST(Involution, Examples) {
    EXPECT_EQ(involution_nu(X(1)), X(56));
    std::mt19937_64 rng(7);
    auto f = e7::oracle::random_polynomial(rng, 3, 20);
    EXPECT_EQ(involution_nu(involution_nu(f)), f);
    const auto& z = e7::zeta::zeta_basis();
    EXPECT_EQ(involution_nu(z[1]),
              parse_polynomial("+x56*x40 +x55*x43 +x54*x45 +x53*x47 +x52*x48 -x51*x50"));
}

TEST(ConstDiffOp, Examples) {
    EXPECT_EQ(apply_constop(ConstDiffOp(X(1)), X(1) * X(1)), X(1) * 2);
    EXPECT_EQ(apply_constop(ConstDiffOp(X(1) * X(2)), X(1) * X(2)), Polynomial(1));
    std::mt19937_64 rng(8);
    auto d4 = ConstDiffOp(e7::oracle::random_polynomial(rng, 4, 30, 6));
    auto f3 = e7::oracle::random_polynomial(rng, 3, 30, 6);
    EXPECT_TRUE(apply_constop(d4, f3).is_zero());
}

TEST(ConstDiffOp, LowersDegreeByOrder) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        auto d = ConstDiffOp(e7::oracle::random_polynomial(rng, 2, 10, 5));
        auto f = e7::oracle::random_polynomial(rng, 5, 40, 5);
        auto g = apply_constop(d, f);
        if (!g.is_zero()) {
            EXPECT_TRUE(g.is_homogeneous());
            EXPECT_EQ(g.degree(), 3);
        }
    }
}

TEST(ConstDiffOp, FallingFactorials) {
    // d1^2 x1^5 = 20 x1^3
    EXPECT_EQ(apply_constop(ConstDiffOp(X(1) * X(1)), X(1).pow(5)), X(1).pow(3) * 20);
}

}  // namespace
