#ifndef E7_REP_HPP
#define E7_REP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "e7/poly.hpp"
#include "e7/report.hpp"
#include "e7/roots.hpp"

namespace e7::rep {

using poly::LinDiffOp;
using roots::RootVec;

// The 63 positive E7 roots, ordered by height then lexicographically.
const std::vector<RootVec>& e7_positive_roots();

// Index r with x_r = E_beta, or 0 when beta is not a basis root.
int basis_index(const RootVec& beta);

// Printed operators for the simple roots (12 terms each).
LinDiffOp simple_raising(int i);
// Diagonal operator for alpha_r: a_{i,r} on x_i, -a_{i,r} on x_{57-i}.
LinDiffOp cartan_op(int r);
// Cartan element of a root lattice vector: sum k_r cartan_op(r).
LinDiffOp coroot_op(const RootVec& alpha);

// Eigenvalues of the seven Cartan operators on x_i.
const std::array<int, 7>& variable_weight(int i);
roots::WeightVec weight_of_monomial(const poly::Monomial& m);
std::array<int, 7> fund_weight_of_monomial(const poly::Monomial& m);

// E_alpha acting on V by the adjoint action inside E8:
// sum over basis roots beta of F(alpha, beta) x_{alpha+beta} d_{x_beta}.
LinDiffOp adjoint_operator(const RootVec& alpha);

struct RepTable {
    std::map<RootVec, LinDiffOp> raising;
    std::map<RootVec, LinDiffOp> lowering;  // keyed by the positive root
    std::array<LinDiffOp, 7> cartan;

    // Operator of any E7 root (negative roots map to lowering).
    const LinDiffOp& root_op(const RootVec& alpha) const;
};

// Raising operators generated from the simple ones:
// E_{beta + alpha_i} = F(beta, alpha_i) [E_beta, E_alpha_i]. Throws if a
// generated operator vanishes.
RepTable generate_full_rep();
const RepTable& full_rep();  // cached

struct VerifyOptions {
    std::size_t random_pairs = 500;
    std::uint64_t seed = 20240601;
    bool exhaustive = false;  // all root pairs instead of sampled ones
};

// Checks [h, E_a] = (h, a) E_a, [E_a, E_-a] = -a, and
// [E_a, E_b] = F(a, b) E_{a+b} (or 0 when a + b is not a root or 0).
VerificationReport verify_rep(const RepTable& t, const VerifyOptions& opt = {});

struct OperatorDiff {
    RootVec root;
    LinDiffOp generated_minus_printed;
};

struct GoldenOperatorReport {
    std::size_t compared = 0;
    std::size_t matched_corrected = 0;   // generated == printed with errata applied
    std::size_t matched_verbatim = 0;    // generated == printed as transcribed
    std::size_t verbatim_diff_terms = 0; // total terms in generated - printed
    bool diff_equals_errata = false;     // verbatim differences are exactly the registered ones
    std::vector<OperatorDiff> verbatim_diffs;
};
GoldenOperatorReport compare_with_printed(const RepTable& t);

// Rank of the 133 operators as vectors in the 56*56 matrix space.
std::size_t operator_span_rank(const RepTable& t);

}  // namespace e7::rep

#endif  // E7_REP_HPP
