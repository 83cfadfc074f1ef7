#ifndef E7_SINGULAR_HPP
#define E7_SINGULAR_HPP

#include <array>
#include <optional>
#include <vector>

#include "e7/exact.hpp"
#include "e7/poly.hpp"
#include "e7/report.hpp"
#include "e7/roots.hpp"

// Singular vectors: weight vectors annihilated by every raising operator.
namespace e7::singular {

using exact::Rational;
using poly::Monomial;
using poly::Polynomial;
using Fund = std::array<int, 7>;

Fund fund(int i);  // lambda_i, 1-based
Fund fund_add(const Fund& a, const Fund& b);

struct WeightSpaceBasis {
    int degree = 0;
    roots::WeightVec weight;
    std::vector<Monomial> monomials;  // descending graded-lex
};

WeightSpaceBasis weight_space_basis(int d, const Fund& w);

struct SingularSpace {
    std::vector<Polynomial> basis;  // leading coefficient 1 each
    std::size_t weight_space_size = 0;
    std::size_t equations = 0;
};

// Nullspace of the seven simple raisings on the (d, w) weight space.
SingularSpace singular_space(int d, const Fund& w);

// Dominant weights occurring among degree-d monomials, sorted.
std::vector<Fund> dominant_weights(int d);

// Number of monomials zeta1^n1 sigma^n2 x1^n3 theta^n4 eta^n5 of degree d and weight w.
int expected_singular_count(int d, const Fund& w);

// Transcribed constructions, expanded in x.
Polynomial golden_zeta1();
Polynomial golden_theta();  // as printed
Polynomial golden_sigma();
enum class EtaReading { Corrected, Verbatim };
Polynomial golden_eta(EtaReading reading = EtaReading::Corrected);

// Unique singular vectors from the nullspace, scaled to the printed
// leading coefficients (1 for zeta1 and sigma, 1/2 for theta, 3 for eta).
Polynomial solved_zeta1();
Polynomial solved_theta();
Polynomial solved_sigma();
Polynomial solved_eta();

// b = ratio * a for some nonzero ratio.
std::optional<Rational> proportionality(const Polynomial& a, const Polynomial& b);

// Set x3..x54 to zero.
Polynomial specialize_edge(const Polynomial& f);

// d f / d x_i
Polynomial partial(const Polynomial& f, int i);

// Indices r with simple_raising(r)(f) != 0.
std::vector<int> simple_failures(const Polynomial& f);
// Annihilated by all 63 raising operators (or all 63 lowering operators).
bool killed_by_all_raisings(const Polynomial& f);
bool killed_by_all_lowerings(const Polynomial& f);

// Per dominant weight of degree d: nullspace dimension equals the monomial count.
VerificationReport dominant_sweep(int d);

}  // namespace e7::singular

#endif  // E7_SINGULAR_HPP
