#ifndef E7_ZETA_HPP
#define E7_ZETA_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "e7/poly.hpp"
#include "e7/report.hpp"

// The adjoint module W inside the quadratics: basis zeta_1..zeta_133.
namespace e7::zeta {

using exact::Rational;
using poly::LinDiffOp;
using poly::Polynomial;

// Etilde_r = nu(E_alpha_r): the chain operators.
LinDiffOp tilde_op(int r);

enum class ChainReading { Corrected, Verbatim };

class ZetaBasis {
public:
    // zetas[i] for i = 1..133; index 0 unused.
    explicit ZetaBasis(std::vector<Polynomial> zetas);

    const Polynomial& operator[](int i) const { return zetas_.at(i); }
    const std::vector<Polynomial>& zetas() const { return zetas_; }
    int size() const { return static_cast<int>(zetas_.size()) - 1; }

    // Fundamental-weight coordinates of zeta_i.
    const std::array<int, 7>& weight(int i) const { return weights_.at(i); }

    // Coefficients of f over the basis, or nullopt when f is not in W.
    std::optional<std::map<int, Rational>> decompose(const Polynomial& f) const;

    // sum c_i zeta_i
    Polynomial combine(const std::map<int, Rational>& coeffs) const;

private:
    std::vector<Polynomial> zetas_;
    std::vector<std::array<int, 7>> weights_;
    std::map<std::array<int, 7>, std::vector<int>> by_weight_;
};

// zeta_1 from the seed, zeta_2..zeta_70 as Etilde_op(zeta_src) along the chain,
// zeta_i = nu(zeta_{134-i}) for i = 71..133. Throws when a step yields zero,
// a source is undefined or a label repeats.
ZetaBasis build_zeta_basis(ChainReading reading = ChainReading::Corrected);
const ZetaBasis& zeta_basis();  // cached, corrected reading

// Generated zeta_n versus the transcribed chain values.
VerificationReport check_chain(const ZetaBasis& z);

// Every zeta is a weight vector, weights of zeta_1..zeta_63 equal the
// reference table, zeta_{134-i} has the opposite weight, zeta_64..70 weight 0.
VerificationReport check_weights(const ZetaBasis& z);

// Exact rank of the coefficient matrix over the 1596 quadratic monomials.
std::size_t zeta_rank(const ZetaBasis& z);

enum class WReading { Corrected, Verbatim };

// Transcribed action of E_alpha_r and Etilde_r on zeta_1..zeta_63, restricted
// to components on zeta_1..63 (E) or zeta_1..70 (Etilde).
VerificationReport golden_check_w_action(const ZetaBasis& z, WReading reading = WReading::Corrected);

// Action of E_alpha_r on all 133 basis vectors: W_1 part plus its mirror
// under z_a d_b -> z_{134-b} d_{134-a}, plus the listed extra terms.
VerificationReport check_full_w_action(const ZetaBasis& z);

// Every simple raising and lowering maps each zeta into W.
VerificationReport check_submodule(const ZetaBasis& z);

}  // namespace e7::zeta

#endif  // E7_ZETA_HPP
