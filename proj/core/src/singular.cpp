#include "e7/singular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "e7/data.hpp"
#include "e7/errata.hpp"
#include "e7/rep.hpp"
#include "e7/zeta.hpp"

namespace e7::singular {

namespace {

struct Bounds {
    // suffix extremes of each fundamental coordinate over variables v..56
    std::array<Fund, 58> lo{};
    std::array<Fund, 58> hi{};
};

const Bounds& bounds() {
    static const Bounds b = [] {
        Bounds r;
        for (int c = 0; c < 7; ++c) r.lo[57][c] = r.hi[57][c] = 0;
        for (int v = 56; v >= 1; --v) {
            const auto& w = rep::variable_weight(v);
            for (int c = 0; c < 7; ++c) {
                r.lo[v][c] = v == 56 ? w[c] : std::min(w[c], r.lo[v + 1][c]);
                r.hi[v][c] = v == 56 ? w[c] : std::max(w[c], r.hi[v + 1][c]);
            }
        }
        return r;
    }();
    return b;
}

void enumerate(int v, int left, Fund& rest, std::vector<int>& vars, std::vector<Monomial>& out) {
    if (left == 0) {
        if (rest == Fund{}) out.push_back(Monomial::from_vars(vars));
        return;
    }
    if (v > 56) return;
    const auto& b = bounds();
    for (int c = 0; c < 7; ++c)
        if (rest[c] < left * b.lo[v][c] || rest[c] > left * b.hi[v][c]) return;
    const auto& w = rep::variable_weight(v);
    for (int e = left; e >= 0; --e) {
        for (int c = 0; c < 7; ++c) rest[c] -= e * w[c];
        for (int k = 0; k < e; ++k) vars.push_back(v);
        enumerate(v + 1, left - e, rest, vars, out);
        for (int k = 0; k < e; ++k) vars.pop_back();
        for (int c = 0; c < 7; ++c) rest[c] += e * w[c];
    }
}

Polynomial x(int i) { return Polynomial::var(i); }

Polynomial scaled_unique(int d, const Fund& w, const Rational& lead, const char* what) {
    auto s = singular_space(d, w);
    if (s.basis.size() != 1)
        throw std::runtime_error(std::string("singular space of ") + what + " is not one-dimensional");
    return s.basis.front() * lead;
}

}  // namespace

Fund fund(int i) {
    Fund f{};
    f.at(i - 1) = 1;
    return f;
}

Fund fund_add(const Fund& a, const Fund& b) {
    Fund r;
    for (int c = 0; c < 7; ++c) r[c] = a[c] + b[c];
    return r;
}

WeightSpaceBasis weight_space_basis(int d, const Fund& w) {
    if (d < 0) throw std::invalid_argument("negative degree");
    WeightSpaceBasis b;
    b.degree = d;
    b.weight = roots::weight_from_fund(w);
    Fund rest = w;
    std::vector<int> vars;
    enumerate(1, d, rest, vars, b.monomials);
    std::sort(b.monomials.begin(), b.monomials.end(), poly::grlex_greater);
    return b;
}

SingularSpace singular_space(int d, const Fund& w) {
    const auto ws = weight_space_basis(d, w);
    SingularSpace s;
    s.weight_space_size = ws.monomials.size();
    if (ws.monomials.empty()) return s;
    std::vector<poly::LinDiffOp> ops;
    for (int r = 1; r <= 7; ++r) ops.push_back(rep::simple_raising(r));

    std::unordered_map<Monomial, std::size_t, poly::MonomialHash> row_index[7];
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    std::size_t rows = 0;
    for (std::size_t col = 0; col < ws.monomials.size(); ++col) {
        Polynomial img_src = Polynomial::monomial(ws.monomials[col]);
        for (int r = 0; r < 7; ++r) {
            const Polynomial img = ops[r].apply(img_src);
            for (const auto& [m, c] : img.terms()) {
                auto [it, fresh] = row_index[r].try_emplace(m, rows);
                if (fresh) ++rows;
                entries.emplace_back(it->second, col, c);
            }
        }
    }
    exact::SparseMatrix a(rows, ws.monomials.size());
    for (const auto& [r, c, v] : entries) a.add(r, c, v);
    s.equations = rows;
    for (const auto& v : exact::exact_nullspace(a)) {
        std::vector<poly::Term> terms;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) terms.emplace_back(ws.monomials[k], v[k]);
        s.basis.push_back(Polynomial::from_terms(std::move(terms)));
    }
    return s;
}

std::vector<Fund> dominant_weights(int d) {
    std::set<Fund> cur = {Fund{}};
    for (int k = 0; k < d; ++k) {
        std::set<Fund> next;
        for (const auto& s : cur)
            for (int v = 1; v <= 56; ++v) next.insert(fund_add(s, rep::variable_weight(v)));
        cur = std::move(next);
    }
    std::vector<Fund> out;
    for (const auto& w : cur)
        if (std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; })) out.push_back(w);
    return out;
}

int expected_singular_count(int d, const Fund& w) {
    int count = 0;
    for (int n1 = 0; 2 * n1 <= d; ++n1)
        for (int n2 = 0; 2 * n1 + 4 * n2 <= d; ++n2)
            for (int n4 = 0; 2 * n1 + 4 * n2 + 3 * n4 <= d; ++n4)
                for (int n5 = 0; 2 * n1 + 4 * n2 + 3 * n4 + 4 * n5 <= d; ++n5) {
                    int n3 = d - 2 * n1 - 4 * n2 - 3 * n4 - 4 * n5;
                    Fund g{};
                    g[0] = n1;
                    g[5] = n2;
                    g[6] = n3 + n4;
                    if (g == w) ++count;
                }
    return count;
}

Polynomial golden_zeta1() { return zeta::zeta_basis()[1]; }

Polynomial golden_theta() {
    const auto& z = zeta::zeta_basis();
    Polynomial f;
    for (const auto& t : data::invariant_formulas().theta) f += x(t.a) * z[t.b] * t.c;
    return f;
}

Polynomial golden_sigma() {
    const auto& z = zeta::zeta_basis();
    Polynomial f;
    for (const auto& t : data::invariant_formulas().sigma) f += z[t.a] * z[t.b] * t.c;
    return f;
}

Polynomial golden_eta(EtaReading reading) {
    const auto& z = zeta::zeta_basis();
    const auto& inv = data::invariant_formulas();
    std::set<int> index(inv.eta_index_set.begin(), inv.eta_index_set.end());
    if (reading == EtaReading::Corrected)
        for (int i : errata::eta_index_removals()) index.erase(i);
    std::vector<poly::Term> terms;
    auto add_product = [&](const Polynomial& a, const Polynomial& b, const Rational& c) {
        const Polynomial p = a * b;
        for (const auto& [m, v] : p.terms()) terms.emplace_back(m, v * c);
    };
    for (int i = 1; i <= 63; ++i)
        add_product(z[i], z[134 - i], index.count(i) ? inv.eta_pair_coeff : Rational(-inv.eta_pair_coeff));
    for (const auto& t : inv.eta_cartan) add_product(z[t.a], z[t.b], t.c);
    return poly::accumulate(std::move(terms));
}

Polynomial solved_zeta1() { return scaled_unique(2, fund(1), 1, "(2, l1)"); }
Polynomial solved_theta() { return scaled_unique(3, fund(7), exact::make_rational(1, 2), "(3, l7)"); }
Polynomial solved_sigma() { return scaled_unique(4, fund(6), 1, "(4, l6)"); }
Polynomial solved_eta() { return scaled_unique(4, Fund{}, 3, "(4, 0)"); }

std::optional<Rational> proportionality(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
    if (a.terms().front().first != b.terms().front().first) return std::nullopt;
    Rational ratio = b.terms().front().second / a.terms().front().second;
    if (a * ratio != b) return std::nullopt;
    return ratio;
}

Polynomial specialize_edge(const Polynomial& f) { return f.restrict_to({1, 2, 55, 56}); }

Polynomial partial(const Polynomial& f, int i) {
    std::vector<poly::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(i);
        if (e) terms.emplace_back(m.shifted(i, -1), c * e);
    }
    return poly::accumulate(std::move(terms));
}

std::vector<int> simple_failures(const Polynomial& f) {
    std::vector<int> bad;
    for (int r = 1; r <= 7; ++r)
        if (!rep::simple_raising(r).apply(f).is_zero()) bad.push_back(r);
    return bad;
}

bool killed_by_all_raisings(const Polynomial& f) {
    for (const auto& [a, op] : rep::full_rep().raising)
        if (!op.apply(f).is_zero()) return false;
    return true;
}

bool killed_by_all_lowerings(const Polynomial& f) {
    for (const auto& [a, op] : rep::full_rep().lowering)
        if (!op.apply(f).is_zero()) return false;
    return true;
}

VerificationReport dominant_sweep(int d) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "singular-sweep-d" + std::to_string(d);
    std::size_t found = 0, expected = 0;
    auto weights = dominant_weights(d);
    for (const auto& w : weights) {
        auto s = singular_space(d, w);
        int want = expected_singular_count(d, w);
        found += s.basis.size();
        expected += static_cast<std::size_t>(want);
        rep.check(s.basis.size() == static_cast<std::size_t>(want), "weight " + roots::to_string(w),
                  "found " + std::to_string(s.basis.size()) + ", expected " + std::to_string(want));
        for (std::size_t k = 0; k < s.basis.size(); ++k)
            rep.check(simple_failures(s.basis[k]).empty(), "annihilation " + roots::to_string(w));
    }
    rep.fact("dominant_weights", std::to_string(weights.size()));
    rep.fact("singular_found", std::to_string(found));
    rep.fact("singular_expected", std::to_string(expected));
    rep.wall_time = sw.seconds();
    return rep;
}

}  // namespace e7::singular
