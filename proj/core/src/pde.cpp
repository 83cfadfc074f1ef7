#include "e7/pde.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "e7/singular.hpp"

namespace e7::pde {

namespace {

struct Inputs {
    Polynomial zeta1, sigma, theta, x1;
    IndexedOperator dual;
};

const Inputs& inputs() {
    static const Inputs in{singular::solved_zeta1(), singular::solved_sigma(), singular::solved_theta(),
                           Polynomial::var(1), IndexedOperator(dual_operator(singular::solved_eta()))};
    return in;
}

// Enumerate divisors of m of degree k, with the falling-factorial weight.
void divisors(const Monomial& m, std::size_t pos, int left, std::vector<int>& vars, long weight,
              const std::function<void(const std::vector<int>&, long)>& emit) {
    const auto& p = m.powers();
    if (left == 0) {
        emit(vars, weight);
        return;
    }
    if (pos == p.size()) return;
    int e = p[pos].exp;
    long w = weight;
    for (int t = 0; t <= std::min(e, left); ++t) {
        if (t > 0) {
            w *= e - t + 1;
            vars.push_back(p[pos].var);
        }
        divisors(m, pos + 1, left - t, vars, w, emit);
    }
    for (int t = 1; t <= std::min(e, left); ++t) vars.pop_back();
}

}  // namespace

poly::ConstDiffOp dual_operator(const Polynomial& f) { return poly::ConstDiffOp(f); }

IndexedOperator::IndexedOperator(const poly::ConstDiffOp& op) : order_(op.order()) {
    for (const auto& [m, c] : op.symbol().terms()) {
        if (m.degree() != order_) throw std::invalid_argument("IndexedOperator needs a homogeneous symbol");
        coeffs_.emplace(m, c);
    }
}

Polynomial IndexedOperator::apply(const Polynomial& f) const {
    if (order_ < 0) return {};
    std::unordered_map<Monomial, Rational, poly::MonomialHash> acc;
    std::vector<int> vars;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() < order_) continue;
        divisors(m, 0, order_, vars, 1, [&](const std::vector<int>& d, long w) {
            Monomial dm = Monomial::from_vars(d);
            auto it = coeffs_.find(dm);
            if (it == coeffs_.end()) return;
            Rational v = c * it->second * w;
            auto [pos, fresh] = acc.try_emplace(m.quotient(dm), v);
            if (!fresh) pos->second += v;
        });
    }
    std::vector<poly::Term> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, std::move(c));
    return Polynomial::from_terms(std::move(out));
}

AnnihilationResult check_annihilation(int m1, int m2, int m3, int eps, int budget) {
    if (m1 < 0 || m2 < 0 || m3 < 0 || eps < 0 || eps > 1) throw std::invalid_argument("bad exponents");
    AnnihilationResult r{m1, m2, m3, eps, 2 * m1 + 4 * m2 + m3 + 3 * eps};
    if (r.degree > budget) throw BudgetExceeded(r.degree, budget);
    const auto& in = inputs();
    Polynomial f = in.zeta1.pow(m1) * in.sigma.pow(m2) * in.x1.pow(m3);
    if (eps) f = f * in.theta;
    r.input_terms = f.size();
    r.output_terms = in.dual.apply(f).size();
    return r;
}

VerificationReport annihilation_sweep(int max_degree) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "pde-sweep";
    std::size_t cases = 0;
    for (int eps = 0; eps <= 1; ++eps)
        for (int m2 = 0; 4 * m2 + 3 * eps <= max_degree; ++m2)
            for (int m1 = 0; 2 * m1 + 4 * m2 + 3 * eps <= max_degree; ++m1)
                for (int m3 = 0; 2 * m1 + 4 * m2 + m3 + 3 * eps <= max_degree; ++m3) {
                    auto r = check_annihilation(m1, m2, m3, eps, max_degree);
                    ++cases;
                    rep.check(r.zero(),
                              "D(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) +
                                  "," + std::to_string(eps) + ")",
                              std::to_string(r.output_terms) + " surviving terms");
                }
    rep.fact("cases", std::to_string(cases));
    rep.wall_time = sw.seconds();
    return rep;
}

Polynomial dual_of_eta() { return inputs().dual.apply(singular::solved_eta()); }

VerificationReport weight_shift_audit(int bound) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "weight-shift-audit";
    for (int m4 = 0; m4 <= bound; ++m4) {
        for (int m3 = 0; m3 <= bound; ++m3) {
            int count = 0;
            bool shapes_ok = true;
            int n3_at_zero = -1;
            for (int n3 = 0; n3 <= 3 * bound; ++n3)
                for (int n4 = 0; n4 <= 3 * bound; ++n4)
                    for (int n5 = 0; n5 <= 3 * bound; ++n5) {
                        if (n3 + n4 != m3 + m4 || n3 + 3 * n4 + 4 * n5 != m3 + 3 * m4 - 4) continue;
                        ++count;
                        shapes_ok = shapes_ok && n4 + 2 * n5 == m4 - 2;
                        if (n4 == 0 && n5 == 0) n3_at_zero = n3;
                    }
            std::string id = "m4=" + std::to_string(m4) + " m3=" + std::to_string(m3);
            if (m4 <= 1) rep.check(count == 0, id, std::to_string(count) + " solutions");
            if (m4 == 2) rep.check(count == 1 && n3_at_zero == m3 + 2, id, std::to_string(count) + " solutions");
            if (m4 >= 2) rep.check(count > 0 && shapes_ok, id, "solutions outside n4 + 2 n5 = m4 - 2");
        }
    }
    rep.wall_time = sw.seconds();
    return rep;
}

}  // namespace e7::pde
