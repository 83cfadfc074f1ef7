#include "e7/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace e7::poly {

// ---- Monomial

Monomial Monomial::from_vars(std::initializer_list<int> vars) {
    return from_vars(std::vector<int>(vars));
}

Monomial Monomial::from_vars(const std::vector<int>& vars) {
    std::vector<int> v(vars);
    std::sort(v.begin(), v.end());
    Monomial m;
    for (int x : v) {
        if (x < 1 || x > kNumVars) throw std::out_of_range("variable index");
        if (!m.powers_.empty() && m.powers_.back().var == x)
            ++m.powers_.back().exp;
        else
            m.powers_.push_back({static_cast<std::uint8_t>(x), 1});
    }
    m.degree_ = static_cast<int>(v.size());
    return m;
}

Monomial Monomial::var(int i, int e) {
    if (i < 1 || i > kNumVars) throw std::out_of_range("variable index");
    Monomial m;
    if (e > 0) m.powers_.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint16_t>(e)});
    m.degree_ = e;
    return m;
}

int Monomial::exponent(int var) const {
    for (const auto& p : powers_)
        if (p.var == var) return p.exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    auto a = powers_.begin();
    auto b = o.powers_.begin();
    while (a != powers_.end() || b != o.powers_.end()) {
        if (b == o.powers_.end() || (a != powers_.end() && a->var < b->var)) {
            m.powers_.push_back(*a++);
        } else if (a == powers_.end() || b->var < a->var) {
            m.powers_.push_back(*b++);
        } else {
            m.powers_.push_back({a->var, static_cast<std::uint16_t>(a->exp + b->exp)});
            ++a;
            ++b;
        }
    }
    m.degree_ = degree_ + o.degree_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    auto b = o.powers_.begin();
    for (const auto& p : powers_) {
        while (b != o.powers_.end() && b->var < p.var) ++b;
        if (b == o.powers_.end() || b->var != p.var || b->exp < p.exp) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial m;
    auto b = o.powers_.begin();
    for (const auto& p : powers_) {
        if (b != o.powers_.end() && b->var == p.var) {
            if (b->exp > p.exp) throw std::invalid_argument("monomial does not divide");
            if (p.exp > b->exp) m.powers_.push_back({p.var, static_cast<std::uint16_t>(p.exp - b->exp)});
            ++b;
        } else {
            if (b != o.powers_.end() && b->var < p.var) throw std::invalid_argument("monomial does not divide");
            m.powers_.push_back(p);
        }
    }
    if (b != o.powers_.end()) throw std::invalid_argument("monomial does not divide");
    m.degree_ = degree_ - o.degree_;
    return m;
}

Monomial Monomial::shifted(int var, int delta) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.powers_.begin(), m.powers_.end(), var,
                               [](const VarPower& p, int v) { return p.var < v; });
    if (it != m.powers_.end() && it->var == var) {
        int e = it->exp + delta;
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0)
            m.powers_.erase(it);
        else
            it->exp = static_cast<std::uint16_t>(e);
    } else {
        if (delta < 0) throw std::invalid_argument("negative exponent");
        if (delta > 0) m.powers_.insert(it, {static_cast<std::uint8_t>(var), static_cast<std::uint16_t>(delta)});
    }
    m.degree_ += delta;
    return m;
}

Monomial Monomial::mapped(const std::function<int(int)>& f) const {
    std::vector<int> vars;
    for (const auto& p : powers_)
        for (int k = 0; k < p.exp; ++k) vars.push_back(f(p.var));
    return from_vars(vars);
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& p : powers_) {
        h ^= (static_cast<std::size_t>(p.var) << 16) | p.exp;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::to_string(const std::string& symbol) const {
    std::string s;
    for (const auto& p : powers_) {
        if (!s.empty()) s += '*';
        s += symbol + std::to_string(p.var);
        if (p.exp > 1) s += '^' + std::to_string(p.exp);
    }
    return s;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t n = std::min(pa.size(), pb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (pa[k].var != pb[k].var) return pa[k].var < pb[k].var;
        if (pa[k].exp != pb[k].exp) return pa[k].exp > pb[k].exp;
    }
    return false;  // equal (same degree forces same length here)
}

// ---- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial(), c);
}

Polynomial accumulate(std::vector<Term> terms) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& [m, c] : terms) {
        auto [it, fresh] = acc.try_emplace(std::move(m), c);
        if (!fresh) it->second += c;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    return Polynomial::from_terms(std::move(out));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    bool canonical = std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.second != 0; });
    for (std::size_t k = 1; canonical && k < terms.size(); ++k)
        canonical = grlex_greater(terms[k - 1].first, terms[k].first);
    if (!canonical) return accumulate(std::move(terms));
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [this](const Term& t) { return t.first.degree() == terms_.front().first.degree(); });
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_greater(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->first, b->first))) {
            out.push_back(*a++);
        } else if (a == terms_.end() || grlex_greater(b->first, a->first)) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    Polynomial p;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(terms_.size() * o.terms_.size(), std::size_t{1} << 20));
    Rational prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            prod = ca * cb;
            auto [it, fresh] = acc.try_emplace(ma * mb, prod);
            if (!fresh) it->second += prod;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    Polynomial p;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::restrict_to(const std::vector<int>& keep) const {
    std::vector<bool> ok(kNumVars + 1, false);
    for (int v : keep) ok.at(v) = true;
    Polynomial p;
    for (const auto& t : terms_) {
        bool in = std::all_of(t.first.powers().begin(), t.first.powers().end(),
                              [&](const VarPower& vp) { return ok[vp.var]; });
        if (in) p.terms_.push_back(t);
    }
    return p;
}

Polynomial Polynomial::mapped(const std::function<int(int)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m.mapped(f), c);
    return accumulate(std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial involution_nu(const Polynomial& f) {
    return f.mapped([](int r) { return kNumVars + 1 - r; });
}

// ---- text format

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        if (!s.empty()) s += ' ';
        s += c < 0 ? '-' : '+';
        Rational a = abs(c);
        if (m.empty()) {
            s += exact::to_string(a);
        } else {
            if (a != 1) s += exact::to_string(a) + '*';
            s += m.to_string();
        }
    }
    return s;
}

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split_char(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_number(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
}

int parse_index(const std::string& s, std::size_t from) {
    if (from >= s.size()) throw std::invalid_argument("missing index in '" + s + "'");
    for (std::size_t k = from; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad index in '" + s + "'");
    int v = std::stoi(s.substr(from));
    if (v < 1 || v > kNumVars) throw std::out_of_range("variable index in '" + s + "'");
    return v;
}

// "x3^2" -> (3, 2); symbol is 'x' or 'd'.
std::pair<int, int> parse_power(const std::string& f, char symbol) {
    if (f.empty() || f[0] != symbol) throw std::invalid_argument("bad factor '" + f + "'");
    auto caret = f.find('^');
    std::string base = f.substr(0, caret);
    int e = 1;
    if (caret != std::string::npos) {
        std::string es = f.substr(caret + 1);
        if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad exponent '" + f + "'");
        e = std::stoi(es);
    }
    return {parse_index(base, 1), e};
}

// Splits a signed token into sign and body.
std::pair<int, std::string> split_sign(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty term");
    if (tok[0] == '+') return {1, tok.substr(1)};
    if (tok[0] == '-') return {-1, tok.substr(1)};
    return {1, tok};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.size() == 1 && toks[0] == "0") return {};
    std::vector<Term> terms;
    for (const auto& tok : toks) {
        auto [sign, body] = split_sign(tok);
        auto factors = split_char(body, '*');
        Rational c = sign;
        std::vector<int> vars;
        std::size_t k = 0;
        if (is_number(factors[0])) {
            c *= exact::parse_rational(factors[0]);
            k = 1;
        }
        for (; k < factors.size(); ++k) {
            auto [v, e] = parse_power(factors[k], 'x');
            for (int r = 0; r < e; ++r) vars.push_back(v);
        }
        if (vars.empty() && !is_number(factors[0])) throw std::invalid_argument("bad term '" + tok + "'");
        terms.emplace_back(Monomial::from_vars(vars), c);
    }
    return accumulate(std::move(terms));
}

// ---- LinDiffOp

LinDiffOp LinDiffOp::from_terms(std::vector<Term> terms) {
    std::map<std::pair<int, int>, Rational> acc;
    for (auto& t : terms) {
        if (t.i < 1 || t.i > kNumVars || t.j < 1 || t.j > kNumVars) throw std::out_of_range("operator index");
        acc[{t.i, t.j}] += t.c;
    }
    LinDiffOp op;
    for (auto& [k, c] : acc)
        if (c != 0) op.terms_.push_back({k.first, k.second, c});
    return op;
}

LinDiffOp LinDiffOp::single(int i, int j, const Rational& c) { return from_terms({{i, j, c}}); }

Rational LinDiffOp::coefficient(int i, int j) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(i, j),
                               [](const Term& t, const std::pair<int, int>& k) { return std::make_pair(t.i, t.j) < k; });
    if (it != terms_.end() && it->i == i && it->j == j) return it->c;
    return 0;
}

LinDiffOp LinDiffOp::operator+(const LinDiffOp& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(all));
}

LinDiffOp LinDiffOp::operator-() const {
    LinDiffOp r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LinDiffOp LinDiffOp::operator-(const LinDiffOp& o) const { return *this + (-o); }

LinDiffOp LinDiffOp::operator*(const Rational& c) const {
    if (c == 0) return {};
    LinDiffOp r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial LinDiffOp::apply(const Polynomial& f) const {
    std::vector<std::vector<const Term*>> by_j(kNumVars + 1);
    for (const auto& t : terms_) by_j[t.j].push_back(&t);
    std::vector<poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& p : m.powers()) {
            for (const Term* t : by_j[p.var]) {
                Monomial nm = m.shifted(p.var, -1).shifted(t->i, 1);
                out.emplace_back(std::move(nm), c * t->c * p.exp);
            }
        }
    }
    return accumulate(std::move(out));
}

Polynomial apply_linop(const LinDiffOp& op, const Polynomial& f) { return op.apply(f); }

LinDiffOp commutator(const LinDiffOp& a, const LinDiffOp& b) {
    // (x_i d_j)(x_k d_l) - (x_k d_l)(x_i d_j) = delta_jk x_i d_l - delta_li x_k d_j
    std::vector<LinDiffOp::Term> out;
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            if (s.j == t.i) out.push_back({s.i, t.j, s.c * t.c});
            if (t.j == s.i) out.push_back({t.i, s.j, -(s.c * t.c)});
        }
    }
    return LinDiffOp::from_terms(std::move(out));
}

LinDiffOp transpose_tau(const LinDiffOp& op) {
    std::vector<LinDiffOp::Term> out;
    for (const auto& t : op.terms()) out.push_back({t.j, t.i, t.c});
    return LinDiffOp::from_terms(std::move(out));
}

LinDiffOp involution_nu(const LinDiffOp& op) {
    std::vector<LinDiffOp::Term> out;
    for (const auto& t : op.terms()) out.push_back({kNumVars + 1 - t.i, kNumVars + 1 - t.j, t.c});
    return LinDiffOp::from_terms(std::move(out));
}

std::string to_string(const LinDiffOp& op) {
    if (op.is_zero()) return "0";
    std::string s;
    for (const auto& t : op.terms()) {
        if (!s.empty()) s += ' ';
        s += t.c < 0 ? '-' : '+';
        Rational a = abs(t.c);
        if (a != 1) s += exact::to_string(a) + '*';
        s += 'x' + std::to_string(t.i) + "*d" + std::to_string(t.j);
    }
    return s;
}

LinDiffOp parse_linop(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.size() == 1 && toks[0] == "0") return {};
    std::vector<LinDiffOp::Term> terms;
    for (const auto& tok : toks) {
        auto [sign, body] = split_sign(tok);
        auto factors = split_char(body, '*');
        Rational c = sign;
        std::size_t k = 0;
        if (is_number(factors[0])) {
            c *= exact::parse_rational(factors[0]);
            k = 1;
        }
        if (factors.size() != k + 2) throw std::invalid_argument("bad operator term '" + tok + "'");
        auto [i, ei] = parse_power(factors[k], 'x');
        auto [j, ej] = parse_power(factors[k + 1], 'd');
        if (ei != 1 || ej != 1) throw std::invalid_argument("bad operator term '" + tok + "'");
        terms.push_back({i, j, c});
    }
    return LinDiffOp::from_terms(std::move(terms));
}

// ---- ConstDiffOp

Polynomial ConstDiffOp::apply(const Polynomial& f) const {
    std::vector<poly::Term> out;
    exact::Integer ff;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [d, k] : symbol_.terms()) {
            if (!d.divides(m)) continue;
            // product of falling factorials e (e-1) ... (e-k+1)
            ff = 1;
            for (const auto& p : d.powers()) {
                int e = m.exponent(p.var);
                for (int r = 0; r < p.exp; ++r) ff *= e - r;
            }
            out.emplace_back(m.quotient(d), c * k * Rational(ff));
        }
    }
    return accumulate(std::move(out));
}

Polynomial apply_constop(const ConstDiffOp& op, const Polynomial& f) { return op.apply(f); }

}  // namespace e7::poly
