#ifndef E7_PDE_HPP
#define E7_PDE_HPP

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "e7/poly.hpp"
#include "e7/report.hpp"

// The constant-coefficient operator dual to the quartic invariant.
namespace e7::pde {

using exact::Rational;
using poly::Monomial;
using poly::Polynomial;

// x_i^e -> d_i^e, coefficients kept (no factorial normalization).
poly::ConstDiffOp dual_operator(const Polynomial& f);

// Same operator, applied by enumerating the order-k divisors of each input
// monomial and looking them up; used for large inputs.
class IndexedOperator {
public:
    explicit IndexedOperator(const poly::ConstDiffOp& op);
    int order() const { return order_; }
    Polynomial apply(const Polynomial& f) const;

private:
    int order_ = -1;
    std::unordered_map<Monomial, Rational, poly::MonomialHash> coeffs_;
};

constexpr int kDefaultBudget = 10;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int degree, int budget)
        : std::runtime_error("product degree " + std::to_string(degree) + " exceeds the budget " +
                             std::to_string(budget)),
          degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

struct AnnihilationResult {
    int m1 = 0, m2 = 0, m3 = 0, eps = 0;
    int degree = 0;
    std::size_t input_terms = 0;
    std::size_t output_terms = 0;
    bool zero() const { return output_terms == 0; }
};

// D(zeta1^m1 sigma^m2 x1^m3 theta^eps) with zeta1, sigma, theta and eta
// taken from the nullspace. Throws BudgetExceeded when 2m1+4m2+m3+3eps > budget.
AnnihilationResult check_annihilation(int m1, int m2, int m3, int eps, int budget = kDefaultBudget);

// All (m1, m2, m3, eps) with 2m1+4m2+m3+3eps <= max_degree.
VerificationReport annihilation_sweep(int max_degree);

// D(eta), expected to be a nonzero constant.
Polynomial dual_of_eta();

// Exponent bookkeeping: n3+n4 = m3+m4 and n3+3n4+4n5 = m3+3m4-4 over a
// bounded box; no solution when m4 <= 1, exactly one with n4 = n5 = 0 when m4 = 2.
VerificationReport weight_shift_audit(int bound = 8);

}  // namespace e7::pde

#endif  // E7_PDE_HPP
