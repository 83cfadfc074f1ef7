#include "e7/zeta.hpp"

#include <stdexcept>
#include <string>

#include "e7/data.hpp"
#include "e7/errata.hpp"
#include "e7/exact.hpp"
#include "e7/rep.hpp"

namespace e7::zeta {

namespace {

std::string zname(int i) { return "zeta" + std::to_string(i); }

std::string coeffs_text(const std::map<int, Rational>& m) {
    std::string s;
    for (const auto& [a, c] : m) {
        if (!s.empty()) s += ' ';
        s += exact::to_string(c) + "*" + zname(a);
    }
    return s.empty() ? "0" : s;
}

bool is_weight_vector(const Polynomial& f, std::array<int, 7>& w) {
    if (f.is_zero()) return false;
    w = rep::fund_weight_of_monomial(f.terms().front().first);
    for (const auto& [m, c] : f.terms())
        if (rep::fund_weight_of_monomial(m) != w) return false;
    return true;
}

// Column of x_i x_j (i <= j) among the 1596 quadratic monomials.
std::size_t quad_index(const poly::Monomial& m) {
    int i = 0, j = 0;
    const auto& p = m.powers();
    if (p.size() == 1) {
        i = j = p[0].var;
    } else {
        i = p[0].var;
        j = p[1].var;
    }
    // rows i = 1..56 contribute 57 - i entries each
    std::size_t before = static_cast<std::size_t>(i - 1) * 56 - static_cast<std::size_t>(i - 1) * (i - 2) / 2;
    return before + static_cast<std::size_t>(j - i);
}

}  // namespace

LinDiffOp tilde_op(int r) { return poly::involution_nu(rep::simple_raising(r)); }

ZetaBasis::ZetaBasis(std::vector<Polynomial> zetas) : zetas_(std::move(zetas)), weights_(zetas_.size()) {
    for (int i = 1; i < static_cast<int>(zetas_.size()); ++i) {
        if (!is_weight_vector(zetas_[i], weights_[i]))
            throw std::runtime_error(zname(i) + " is not a nonzero weight vector");
        by_weight_[weights_[i]].push_back(i);
    }
}

std::optional<std::map<int, Rational>> ZetaBasis::decompose(const Polynomial& f) const {
    std::map<std::array<int, 7>, std::vector<const poly::Term*>> parts;
    for (const auto& t : f.terms()) parts[rep::fund_weight_of_monomial(t.first)].push_back(&t);
    std::map<int, Rational> out;
    for (const auto& [w, terms] : parts) {
        auto it = by_weight_.find(w);
        if (it == by_weight_.end()) return std::nullopt;
        const auto& cand = it->second;
        std::map<poly::Monomial, std::size_t, decltype(&poly::grlex_greater)> rows(&poly::grlex_greater);
        auto row_of = [&](const poly::Monomial& m) {
            auto [pos, inserted] = rows.emplace(m, rows.size());
            return pos->second;
        };
        std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
        for (std::size_t k = 0; k < cand.size(); ++k)
            for (const auto& [m, c] : zetas_[cand[k]].terms()) entries.emplace_back(row_of(m), k, c);
        std::vector<std::pair<std::size_t, Rational>> rhs;
        for (const auto* t : terms) rhs.emplace_back(row_of(t->first), t->second);
        exact::SparseMatrix a(rows.size(), cand.size());
        for (const auto& [r, c, v] : entries) a.set(r, c, v);
        std::vector<Rational> b(rows.size());
        for (const auto& [r, v] : rhs) b[r] = v;
        auto x = exact::exact_solve(a, b);
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < cand.size(); ++k)
            if ((*x)[k] != 0) out[cand[k]] = (*x)[k];
    }
    return out;
}

Polynomial ZetaBasis::combine(const std::map<int, Rational>& coeffs) const {
    std::vector<poly::Term> terms;
    for (const auto& [i, c] : coeffs)
        for (const auto& [m, v] : zetas_.at(i).terms()) terms.emplace_back(m, v * c);
    return poly::accumulate(std::move(terms));
}

ZetaBasis build_zeta_basis(ChainReading reading) {
    const auto chain = reading == ChainReading::Corrected ? errata::corrected_chain() : data::zeta_chain();
    std::vector<Polynomial> z(134);
    std::vector<bool> have(134, false);
    for (const auto& rec : chain) {
        if (rec.label < 1 || rec.label > 70) throw std::runtime_error("chain label out of range");
        if (have[rec.label]) throw std::runtime_error("chain defines " + zname(rec.label) + " twice");
        if (rec.op == 0) {
            z[rec.label] = rec.value;
        } else {
            if (!have.at(rec.source)) throw std::runtime_error("chain source " + zname(rec.source) + " undefined");
            z[rec.label] = apply_linop(tilde_op(rec.op), z[rec.source]);
            if (z[rec.label].is_zero()) throw std::runtime_error("chain step for " + zname(rec.label) + " yields zero");
        }
        have[rec.label] = true;
    }
    for (int i = 1; i <= 70; ++i)
        if (!have[i]) throw std::runtime_error("chain never defines " + zname(i));
    for (int i = 71; i <= 133; ++i) z[i] = poly::involution_nu(z[134 - i]);
    return ZetaBasis(std::move(z));
}

const ZetaBasis& zeta_basis() {
    static const ZetaBasis z = build_zeta_basis();
    return z;
}

VerificationReport check_chain(const ZetaBasis& z) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "zeta-chain";
    for (const auto& rec : errata::corrected_chain())
        rep.check(z[rec.label] == rec.value, zname(rec.label), "generated " + poly::to_string(z[rec.label]));
    rep.wall_time = sw.seconds();
    return rep;
}

VerificationReport check_weights(const ZetaBasis& z) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "zeta-weights";
    const auto& t2 = data::zeta_weights();
    for (int i = 1; i <= 63; ++i) {
        rep.check(z.weight(i) == t2[i], "table " + zname(i), roots::to_string(z.weight(i)));
        std::array<int, 7> neg{};
        for (int k = 0; k < 7; ++k) neg[k] = -t2[i][k];
        rep.check(z.weight(134 - i) == neg, "opposite " + zname(134 - i), roots::to_string(z.weight(134 - i)));
    }
    for (int i = 64; i <= 70; ++i)
        rep.check(z.weight(i) == std::array<int, 7>{}, "zero " + zname(i), roots::to_string(z.weight(i)));
    rep.wall_time = sw.seconds();
    return rep;
}

std::size_t zeta_rank(const ZetaBasis& z) {
    exact::SparseMatrix m(133, 1596);
    for (int i = 1; i <= 133; ++i)
        for (const auto& [mono, c] : z[i].terms()) {
            if (mono.degree() != 2) throw std::runtime_error(zname(i) + " is not quadratic");
            m.set(i - 1, quad_index(mono), c);
        }
    return exact::exact_rank(m);
}

VerificationReport golden_check_w_action(const ZetaBasis& z, WReading reading) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = reading == WReading::Corrected ? "w-action" : "w-action-verbatim";
    const auto recs = reading == WReading::Corrected ? errata::corrected_w_action() : data::w_action();
    std::size_t terms = 0;
    for (const auto& rec : recs) {
        LinDiffOp op = rec.tilde ? tilde_op(rec.r) : rep::simple_raising(rec.r);
        std::map<int, std::map<int, Rational>> claimed;
        for (const auto& t : rec.terms) {
            claimed[t.b][t.a] += t.c;
            ++terms;
        }
        const int limit = rec.tilde ? 70 : 63;
        const std::string tag = std::string(rec.tilde ? "Et" : "E") + std::to_string(rec.r);
        for (int b = 1; b <= 63; ++b) {
            auto d = z.decompose(apply_linop(op, z[b]));
            if (!rep.check(d.has_value(), tag + " " + zname(b) + " leaves W")) continue;
            std::map<int, Rational> got;
            for (const auto& [a, c] : *d)
                if (a <= limit) got[a] = c;
            std::map<int, Rational> want;
            for (const auto& [a, c] : claimed[b])
                if (c != 0) want[a] = c;
            rep.check(got == want, tag + " " + zname(b),
                      "computed " + coeffs_text(got) + ", listed " + coeffs_text(want));
        }
    }
    rep.fact("listed_terms", std::to_string(terms));
    rep.wall_time = sw.seconds();
    return rep;
}

VerificationReport check_full_w_action(const ZetaBasis& z) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "w-action-full";
    const auto w1 = errata::corrected_w_action();
    for (const auto& full : data::w_full()) {
        std::map<int, std::map<int, Rational>> m;
        for (const auto& rec : w1) {
            if (rec.tilde || rec.r != full.r) continue;
            for (const auto& t : rec.terms) {
                m[t.b][t.a] += t.c;
                m[134 - t.a][134 - t.b] += t.c * full.mirror_sign;
            }
        }
        for (const auto& t : full.extras) m[t.b][t.a] += t.c;
        LinDiffOp op = rep::simple_raising(full.r);
        for (int b = 1; b <= 133; ++b) {
            auto d = z.decompose(apply_linop(op, z[b]));
            std::map<int, Rational> want;
            for (const auto& [a, c] : m[b])
                if (c != 0) want[a] = c;
            const std::string id = "E" + std::to_string(full.r) + " " + zname(b);
            if (!rep.check(d.has_value(), id + " leaves W")) continue;
            rep.check(*d == want, id, "computed " + coeffs_text(*d) + ", expected " + coeffs_text(want));
        }
    }
    rep.wall_time = sw.seconds();
    return rep;
}

VerificationReport check_submodule(const ZetaBasis& z) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "w-submodule";
    const auto& t = rep::full_rep();
    for (int r = 1; r <= 7; ++r) {
        const auto& up = t.raising.at(roots::simple_root(r));
        const auto& down = t.lowering.at(roots::simple_root(r));
        for (int b = 1; b <= 133; ++b) {
            rep.check(z.decompose(apply_linop(up, z[b])).has_value(), "E" + std::to_string(r) + " " + zname(b));
            rep.check(z.decompose(apply_linop(down, z[b])).has_value(), "F" + std::to_string(r) + " " + zname(b));
        }
    }
    rep.wall_time = sw.seconds();
    return rep;
}

}  // namespace e7::zeta
