#ifndef E7_POLY_HPP
#define E7_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "e7/exact.hpp"

namespace e7::poly {

using exact::Rational;

constexpr int kNumVars = 56;

struct VarPower {
    std::uint8_t var;   // 1..56
    std::uint16_t exp;  // > 0
    bool operator==(const VarPower& o) const { return var == o.var && exp == o.exp; }
};

// Sparse exponent vector, sorted by variable, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    // Multiset of variable indices, e.g. {1, 1, 17} for x1^2 x17.
    static Monomial from_vars(std::initializer_list<int> vars);
    static Monomial from_vars(const std::vector<int>& vars);
    static Monomial var(int i, int e = 1);

    int degree() const { return degree_; }
    int exponent(int var) const;
    bool empty() const { return powers_.empty(); }
    const auto& powers() const { return powers_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // this / o; requires o.divides(*this)
    Monomial quotient(const Monomial& o) const;
    // Exponent of `var` changed by delta (result must stay nonnegative).
    Monomial shifted(int var, int delta) const;
    Monomial mapped(const std::function<int(int)>& f) const;

    bool operator==(const Monomial& o) const { return degree_ == o.degree_ && powers_ == o.powers_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string to_string(const std::string& symbol = "x") const;

private:
    boost::container::small_vector<VarPower, 6> powers_;
    int degree_ = 0;
};

// Graded lexicographic with x1 > x2 > ... > x56: larger degree first, then
// the first differing variable decides (higher exponent is greater).
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using Term = std::pair<Monomial, Rational>;

// Terms kept in descending graded-lex order with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // constant
    static Polynomial from_terms(std::vector<Term> terms);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);
    static Polynomial var(int i) { return monomial(Monomial::var(i)); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Keep only monomials whose variables all lie in `keep`.
    Polynomial restrict_to(const std::vector<int>& keep) const;
    Polynomial mapped(const std::function<int(int)>& f) const;

private:
    std::vector<Term> terms_;
};

// Sum of terms; duplicates merged, zeros dropped, canonical order restored.
Polynomial accumulate(std::vector<Term> terms);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Canonical text: terms separated by single spaces, each `+c*x_i^e*...`,
// coefficient omitted when it is 1 and the monomial is nonconstant; zero
// is `0`. parse_polynomial accepts this form (and explicit `1*`).
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text);

// r -> 57 - r on every variable.
Polynomial involution_nu(const Polynomial& f);

// sum c * x_i d/dx_j, at most one term per (i, j)
class LinDiffOp {
public:
    struct Term {
        int i;
        int j;
        Rational c;
        bool operator==(const Term& o) const { return i == o.i && j == o.j && c == o.c; }
    };

    LinDiffOp() = default;
    static LinDiffOp from_terms(std::vector<Term> terms);
    static LinDiffOp single(int i, int j, const Rational& c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int i, int j) const;

    LinDiffOp operator+(const LinDiffOp& o) const;
    LinDiffOp operator-(const LinDiffOp& o) const;
    LinDiffOp operator-() const;
    LinDiffOp operator*(const Rational& c) const;
    bool operator==(const LinDiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinDiffOp& o) const { return !(*this == o); }

    Polynomial apply(const Polynomial& f) const;

private:
    std::vector<Term> terms_;  // sorted by (i, j)
};

Polynomial apply_linop(const LinDiffOp& op, const Polynomial& f);
// ab - ba, expressed again as a first-order operator.
LinDiffOp commutator(const LinDiffOp& a, const LinDiffOp& b);
// c x_i d_j -> c x_j d_i
LinDiffOp transpose_tau(const LinDiffOp& op);
// c x_i d_j -> c x_{57-i} d_{57-j}
LinDiffOp involution_nu(const LinDiffOp& op);

std::string to_string(const LinDiffOp& op);
LinDiffOp parse_linop(const std::string& text);

// Constant-coefficient operator: a polynomial in d_1..d_56.
class ConstDiffOp {
public:
    ConstDiffOp() = default;
    explicit ConstDiffOp(Polynomial symbol) : symbol_(std::move(symbol)) {}

    // The underlying polynomial with x_i standing for d_i.
    const Polynomial& symbol() const { return symbol_; }
    int order() const { return symbol_.degree(); }
    bool is_zero() const { return symbol_.is_zero(); }

    Polynomial apply(const Polynomial& f) const;

private:
    Polynomial symbol_;
};

Polynomial apply_constop(const ConstDiffOp& op, const Polynomial& f);

}  // namespace e7::poly

#endif  // E7_POLY_HPP
