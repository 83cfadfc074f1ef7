#include "e7/rep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "e7/data.hpp"
#include "e7/errata.hpp"
#include "e7/exact.hpp"

namespace e7::rep {

using exact::Rational;
using roots::cocycle_F;
using roots::inner;

namespace {

RootVec from7(const std::array<int, 7>& k) {
    RootVec r{};
    for (int i = 0; i < 7; ++i) r[i] = k[i];
    return r;
}

std::string root_label(const RootVec& a) { return "(" + roots::to_string(a) + ")"; }

}  // namespace

const std::vector<RootVec>& e7_positive_roots() {
    static const auto v = [] {
        auto p = roots::positive_roots(roots::System::E7);
        std::stable_sort(p.begin(), p.end(),
                         [](const RootVec& a, const RootVec& b) { return roots::height(a) < roots::height(b); });
        return p;
    }();
    return v;
}

int basis_index(const RootVec& beta) {
    static const auto idx = [] {
        std::map<RootVec, int> m;
        const auto& b = data::basis_roots();
        for (int i = 1; i <= 56; ++i) m[b[i]] = i;
        return m;
    }();
    auto it = idx.find(beta);
    return it == idx.end() ? 0 : it->second;
}

LinDiffOp simple_raising(int i) {
    if (i < 1 || i > 7) throw std::out_of_range("simple root index");
    std::array<int, 7> k{};
    k[i - 1] = 1;
    for (const auto& rec : data::printed_raising_operators())
        if (rec.root == k) return rec.op;
    throw std::runtime_error("simple operator missing from data");
}

const std::array<int, 7>& variable_weight(int i) {
    static const auto w = [] {
        std::vector<std::array<int, 7>> v(57);
        const auto& t1 = data::cartan_eigenvalues();
        for (int r = 1; r <= 28; ++r) {
            v[r] = t1[r];
            for (int k = 0; k < 7; ++k) v[57 - r][k] = -t1[r][k];
        }
        return v;
    }();
    if (i < 1 || i > 56) throw std::out_of_range("variable index");
    return w[i];
}

LinDiffOp cartan_op(int r) {
    if (r < 1 || r > 7) throw std::out_of_range("cartan index");
    std::vector<LinDiffOp::Term> terms;
    for (int i = 1; i <= 56; ++i) {
        int a = variable_weight(i)[r - 1];
        if (a != 0) terms.push_back({i, i, Rational(a)});
    }
    return LinDiffOp::from_terms(std::move(terms));
}

LinDiffOp coroot_op(const RootVec& alpha) {
    if (alpha[7] != 0) throw std::invalid_argument("not an E7 lattice vector");
    LinDiffOp op;
    for (int r = 0; r < 7; ++r)
        if (alpha[r] != 0) op = op + cartan_op(r + 1) * Rational(alpha[r]);
    return op;
}

std::array<int, 7> fund_weight_of_monomial(const poly::Monomial& m) {
    std::array<int, 7> w{};
    for (const auto& p : m.powers()) {
        const auto& v = variable_weight(p.var);
        for (int k = 0; k < 7; ++k) w[k] += p.exp * v[k];
    }
    return w;
}

roots::WeightVec weight_of_monomial(const poly::Monomial& m) {
    return roots::weight_from_fund(fund_weight_of_monomial(m));
}

LinDiffOp adjoint_operator(const RootVec& alpha) {
    const auto& b = data::basis_roots();
    std::vector<LinDiffOp::Term> terms;
    for (int i = 1; i <= 56; ++i) {
        int t = basis_index(roots::add(alpha, b[i]));
        if (t) terms.push_back({t, i, Rational(cocycle_F(alpha, b[i]))});
    }
    return LinDiffOp::from_terms(std::move(terms));
}

const LinDiffOp& RepTable::root_op(const RootVec& alpha) const {
    if (roots::is_positive(alpha)) return raising.at(alpha);
    return lowering.at(roots::neg(alpha));
}

RepTable generate_full_rep() {
    RepTable t;
    for (int r = 1; r <= 7; ++r) {
        t.cartan[r - 1] = cartan_op(r);
        t.raising[roots::simple_root(r)] = simple_raising(r);
    }
    for (const auto& a : e7_positive_roots()) {
        if (roots::height(a) == 1) continue;
        bool done = false;
        for (int i = 1; i <= 7 && !done; ++i) {
            RootVec beta = roots::sub(a, roots::simple_root(i));
            auto it = t.raising.find(beta);
            if (it == t.raising.end()) continue;
            LinDiffOp op = commutator(it->second, t.raising.at(roots::simple_root(i))) *
                           Rational(cocycle_F(beta, roots::simple_root(i)));
            if (op.is_zero()) throw std::runtime_error("generated operator vanishes at root " + root_label(a));
            t.raising[a] = std::move(op);
            done = true;
        }
        if (!done) throw std::runtime_error("no predecessor for root " + root_label(a));
    }
    for (const auto& [a, op] : t.raising) t.lowering[a] = -poly::transpose_tau(op);
    return t;
}

const RepTable& full_rep() {
    static const RepTable t = generate_full_rep();
    return t;
}

VerificationReport verify_rep(const RepTable& t, const VerifyOptions& opt) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "rep-verify";
    const auto all = roots::enumerate_roots(roots::System::E7);
    rep.check(t.raising.size() == 63 && t.lowering.size() == 63, "table-size", "expected 63 raising and 63 lowering");

    for (const auto& [a, op] : t.raising)
        rep.check(t.lowering.at(a) == -poly::transpose_tau(op), "lowering-transpose " + root_label(a));

    for (int r = 1; r <= 7; ++r) {
        RootVec ar = roots::simple_root(r);
        for (const auto& a : all) {
            LinDiffOp lhs = commutator(t.cartan[r - 1], t.root_op(a));
            LinDiffOp rhs = t.root_op(a) * Rational(inner(ar, a));
            rep.check(lhs == rhs, "cartan r=" + std::to_string(r) + " root " + root_label(a),
                      "got " + poly::to_string(lhs));
        }
    }

    for (const auto& a : all) {
        LinDiffOp lhs = commutator(t.root_op(a), t.root_op(roots::neg(a)));
        rep.check(lhs == -coroot_op(a), "opposite " + root_label(a), "got " + poly::to_string(lhs));
    }

    auto check_pair = [&](const RootVec& a, const RootVec& b, const std::string& tag) {
        RootVec s = roots::add(a, b);
        if (s == RootVec{}) return;
        LinDiffOp lhs = commutator(t.root_op(a), t.root_op(b));
        LinDiffOp rhs;
        if (roots::is_root(s)) rhs = t.root_op(s) * Rational(cocycle_F(a, b));
        rep.check(lhs == rhs, tag + " " + root_label(a) + " " + root_label(b), "got " + poly::to_string(lhs));
    };

    std::vector<RootVec> gens;
    for (int i = 1; i <= 7; ++i) {
        gens.push_back(roots::simple_root(i));
        gens.push_back(roots::neg(roots::simple_root(i)));
    }
    for (const auto& a : gens)
        for (const auto& b : gens) check_pair(a, b, "generators");

    if (opt.exhaustive) {
        for (const auto& a : all)
            for (const auto& b : all) check_pair(a, b, "pair");
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (std::size_t k = 0; k < opt.random_pairs; ++k) check_pair(all[pick(rng)], all[pick(rng)], "random");
    }
    rep.wall_time = sw.seconds();
    return rep;
}

GoldenOperatorReport compare_with_printed(const RepTable& t) {
    GoldenOperatorReport g;
    bool errata_exact = true;
    for (const auto& rec : data::printed_raising_operators()) {
        RootVec a = from7(rec.root);
        const LinDiffOp& gen = t.raising.at(a);
        ++g.compared;
        if (gen == errata::corrected_operator(rec)) ++g.matched_corrected;
        LinDiffOp diff = gen - rec.op;
        LinDiffOp expected;
        for (const auto& fix : errata::operator_fixes())
            if (fix.root == rec.root)
                expected = expected + LinDiffOp::single(fix.corrected.i, fix.corrected.j, fix.corrected.c) -
                           LinDiffOp::single(fix.printed.i, fix.printed.j, fix.printed.c);
        if (diff != expected) errata_exact = false;
        if (diff.is_zero()) {
            ++g.matched_verbatim;
        } else {
            g.verbatim_diff_terms += diff.size();
            g.verbatim_diffs.push_back({a, diff});
        }
    }
    g.diff_equals_errata = errata_exact && g.compared == 63;
    return g;
}

std::size_t operator_span_rank(const RepTable& t) {
    std::vector<const LinDiffOp*> ops;
    for (const auto& [a, op] : t.raising) ops.push_back(&op);
    for (const auto& [a, op] : t.lowering) ops.push_back(&op);
    for (const auto& op : t.cartan) ops.push_back(&op);
    exact::SparseMatrix m(ops.size(), 56 * 56);
    for (std::size_t r = 0; r < ops.size(); ++r)
        for (const auto& term : ops[r]->terms()) m.set(r, (term.i - 1) * 56 + (term.j - 1), term.c);
    return exact::exact_rank(m);
}

}  // namespace e7::rep
