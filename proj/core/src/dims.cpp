#include "e7/dims.hpp"

#include <stdexcept>
#include <string>

#include "e7/errata.hpp"
#include "e7/roots.hpp"

namespace e7::dims {

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational prod_range(int base, int lo, int hi) {
    Rational r = 1;
    for (int i = lo; i <= hi; ++i) r *= base + i;
    return r;
}

// Printed denominator, read as the literal product of its factors.
Integer printed_denominator() {
    static const Integer d = [] {
        const int factors[][2] = {{2, 3},  {3, 3},  {4, 4},  {5, 5},  {6, 5},  {7, 5},  {8, 4},  {9, 4},  {10, 3},
                                  {11, 3}, {12, 2}, {13, 2}, {14, 1}, {15, 1}, {16, 1}, {17, 1}};
        Integer r = 1;
        for (const auto& f : factors)
            for (int k = 0; k < f[1]; ++k) r *= f[0];
        return r;
    }();
    return d;
}

}  // namespace

Integer weyl_dim(const std::array<int, 7>& fund) {
    for (int c : fund)
        if (c < 0) throw std::invalid_argument("weyl_dim needs a dominant weight");
    static const auto pos = roots::positive_roots(roots::System::E7);
    Rational r = 1;
    for (const auto& a : pos) {
        // (lambda, alpha) = sum_j k_j (lambda, alpha_j) = sum_j k_j fund_j
        long num = 0, den = 0;
        for (int j = 0; j < 7; ++j) {
            num += static_cast<long>(a[j]) * (fund[j] + 1);
            den += a[j];
        }
        r *= exact::make_rational(num, den);
    }
    if (r.get_den() != 1) throw std::logic_error("weyl_dim produced a non-integer");
    return r.get_num();
}

Integer weyl_dim_l1l6l7(int n1, int n2, int n3) {
    std::array<int, 7> f{};
    f[0] = n1;
    f[5] = n2;
    f[6] = n3;
    return weyl_dim(f);
}

Rational explicit_dim_formula(int n1, int n2, int n3, FormulaReading reading) {
    Rational num = Rational(n2 + 4) * (n2 + n3 + 5);
    num *= prod_range(n1, 1, 7) * prod_range(n2, 1, 7);
    num *= prod_range(n2 + n3, 2, 8);
    num *= prod_range(n1 + n2, 5, 11);
    num *= prod_range(n1 + n2 + n3, 6, 12);
    num *= prod_range(n1 + 2 * n2 + n3, 10, 16);
    num *= Rational(2 * n2 + n3 + 9) * (n1 + n2 + 8) * (n1 + n2 + n3 + 9) * (n1 + 2 * n2 + n3 + 13) *
           (2 * n1 + 2 * n2 + n3 + 17) * (n3 + 1);
    Rational r = num / Rational(printed_denominator());
    if (reading == FormulaReading::Corrected) r *= errata::dim_formula_correction(n1, n2, n3);
    return r;
}

SeriesResult series_identity_check(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative degree");
    const int n = max_degree;
    std::vector<Integer> gen(n + 1);
    for (int n1 = 0; 2 * n1 <= n; ++n1)
        for (int n2 = 0; 2 * n1 + 4 * n2 <= n; ++n2)
            for (int n4 = 0; 2 * n1 + 4 * n2 + 3 * n4 <= n; ++n4)
                for (int n3 = 0; 2 * n1 + 4 * n2 + 3 * n4 + n3 <= n; ++n3)
                    gen[2 * n1 + 4 * n2 + 3 * n4 + n3] += weyl_dim_l1l6l7(n1, n2, n3 + n4);
    SeriesResult s;
    s.coeffs.assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        Integer c = binomial(55, k);
        if (k % 2) c = -c;
        for (int j = 0; j + k <= n; ++j) s.coeffs[j + k] += c * gen[j];
    }
    s.passed = true;
    for (int k = 0; k <= n; ++k) s.passed = s.passed && s.coeffs[k] == (k <= 3 ? 1 : 0);
    return s;
}

DecompositionResult decomposition_check(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    DecompositionResult r;
    r.degree = degree;
    r.sum = 0;
    const int d = degree;
    for (int n1 = 0; 2 * n1 <= d; ++n1)
        for (int n2 = 0; 2 * n1 + 4 * n2 <= d; ++n2)
            for (int n4 = 0; 2 * n1 + 4 * n2 + 3 * n4 <= d; ++n4)
                for (int n5 = 0; 2 * n1 + 4 * n2 + 3 * n4 + 4 * n5 <= d; ++n5) {
                    int n3 = d - 2 * n1 - 4 * n2 - 3 * n4 - 4 * n5;
                    r.sum += weyl_dim_l1l6l7(n1, n2, n3 + n4);
                    ++r.solutions;
                }
    r.binomial = binomial(d + 55, 55);
    return r;
}

VerificationReport dims_report(int series_degree, int max_decomposition_degree, int grid) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "dims";
    auto s = series_identity_check(series_degree);
    std::string text;
    for (const auto& c : s.coeffs) text += (text.empty() ? "" : " ") + c.get_str();
    rep.check(s.passed, "series N=" + std::to_string(series_degree), text);
    rep.fact("series_coeffs", text);
    for (int d = 0; d <= max_decomposition_degree; ++d) {
        auto r = decomposition_check(d);
        rep.check(r.passed(), "decomposition d=" + std::to_string(d),
                  "sum " + r.sum.get_str() + " vs " + r.binomial.get_str());
    }
    int corrected = 0, verbatim = 0, total = 0;
    for (int a = 0; a <= grid; ++a)
        for (int b = 0; b <= grid; ++b)
            for (int c = 0; c <= grid; ++c) {
                Rational w(weyl_dim_l1l6l7(a, b, c));
                bool ok = explicit_dim_formula(a, b, c) == w;
                corrected += ok;
                verbatim += explicit_dim_formula(a, b, c, FormulaReading::Verbatim) == w;
                ++total;
                rep.check(ok, "product formula (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
            }
    rep.fact("formula_corrected_agree", std::to_string(corrected) + "/" + std::to_string(total));
    rep.fact("formula_verbatim_agree", std::to_string(verbatim) + "/" + std::to_string(total));
    rep.wall_time = sw.seconds();
    return rep;
}

}  // namespace e7::dims
