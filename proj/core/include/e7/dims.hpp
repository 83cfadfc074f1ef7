#ifndef E7_DIMS_HPP
#define E7_DIMS_HPP

#include <array>
#include <vector>

#include "e7/exact.hpp"
#include "e7/report.hpp"

// Dimensions of irreducible E7 modules and the generating-function identities.
namespace e7::dims {

using exact::Integer;
using exact::Rational;

// Weyl dimension formula for a dominant weight in fundamental coordinates.
// Throws std::invalid_argument on a non-dominant weight.
Integer weyl_dim(const std::array<int, 7>& fund);
// dim V(n1 l1 + n2 l6 + n3 l7) via weyl_dim.
Integer weyl_dim_l1l6l7(int n1, int n2, int n3);

enum class FormulaReading { Corrected, Verbatim };

// Closed product formula for dim V(n1 l1 + n2 l6 + n3 l7). The verbatim
// reading omits the factor (n1+4)/4; the result may then be non-integral.
Rational explicit_dim_formula(int n1, int n2, int n3, FormulaReading reading = FormulaReading::Corrected);

struct SeriesResult {
    std::vector<Integer> coeffs;  // index = power of q
    bool passed = false;          // coeffs == 1,1,1,1,0,...,0 truncated at N
};

// (1-q)^55 sum dim V(n1 l1 + n2 l6 + (n3+n4) l7) q^(2n1+4n2+n3+3n4), through q^N.
SeriesResult series_identity_check(int max_degree);

struct DecompositionResult {
    int degree = 0;
    Integer sum;       // sum of dims over the exponent solutions
    Integer binomial;  // C(d+55, 55)
    std::size_t solutions = 0;
    bool passed() const { return sum == binomial; }
};

// Sum over 2n1+4n2+n3+3n4+4n5 = d of dim V(n1 l1 + n2 l6 + (n3+n4) l7).
DecompositionResult decomposition_check(int degree);

// Criterion-style summaries.
VerificationReport dims_report(int series_degree, int max_decomposition_degree, int grid);

}  // namespace e7::dims

#endif  // E7_DIMS_HPP
