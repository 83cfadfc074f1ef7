#include "e7/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7::exact {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

namespace {

SparseVector::iterator find_col(SparseVector& row, std::size_t c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const auto& e, std::size_t col) { return e.first < col; });
}

}  // namespace

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    auto& row = data_[r];
    auto it = find_col(row, c);
    bool present = it != row.end() && it->first == c;
    if (v == 0) {
        if (present) row.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        row.insert(it, {c, v});
    }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0) return;
    auto& row = data_[r];
    auto it = find_col(row, c);
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return 0;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

std::vector<Rational> SparseMatrix::multiply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
    return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void remove_content(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseVector& row) {
    Integer l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, q] : row) {
        Integer v = l / q.get_den();
        v *= q.get_num();
        out.emplace_back(c, std::move(v));
    }
    remove_content(out);
    return out;
}

// target <- a*target - b*src, where both contain column `col` and
// a, b are chosen so that column cancels.
void eliminate(IntRow& target, const IntRow& src, std::size_t col) {
    auto find = [col](const IntRow& r) -> const Integer& {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        return it->second;
    };
    const Integer& ps = find(src);
    const Integer& pt = find(target);
    Integer g;
    mpz_gcd(g.get_mpz_t(), ps.get_mpz_t(), pt.get_mpz_t());
    Integer a = ps / g;
    Integer b = pt / g;
    IntRow out;
    out.reserve(target.size() + src.size());
    auto it = target.begin();
    auto jt = src.begin();
    Integer tmp;
    while (it != target.end() || jt != src.end()) {
        if (jt == src.end() || (it != target.end() && it->first < jt->first)) {
            out.emplace_back(it->first, a * it->second);
            ++it;
        } else if (it == target.end() || jt->first < it->first) {
            out.emplace_back(jt->first, -b * jt->second);
            ++jt;
        } else {
            tmp = a * it->second;
            tmp -= b * jt->second;
            if (tmp != 0) out.emplace_back(it->first, tmp);
            ++it;
            ++jt;
        }
    }
    remove_content(out);
    target = std::move(out);
}

std::size_t bits(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

struct Forward {
    std::vector<std::size_t> pivot_cols;
    std::vector<IntRow> rows;
    std::size_t max_bits = 0;
};

Forward forward_eliminate(const SparseMatrix& m) {
    std::vector<IntRow> rows(m.rows());
    std::vector<std::vector<std::size_t>> bucket(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r] = to_integer_row(m.row(r));
        if (!rows[r].empty()) bucket[rows[r].front().first].push_back(r);
    }
    Forward f;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto& cand = bucket[c];
        if (cand.empty()) continue;
        std::size_t best = cand[0];
        std::size_t best_bits = bits(rows[best].front().second);
        for (std::size_t k = 1; k < cand.size(); ++k) {
            std::size_t r = cand[k];
            std::size_t b = bits(rows[r].front().second);
            if (b < best_bits || (b == best_bits && r < best)) {
                best = r;
                best_bits = b;
            }
        }
        for (std::size_t r : cand) {
            if (r == best) continue;
            eliminate(rows[r], rows[best], c);
            for (const auto& e : rows[r]) f.max_bits = std::max(f.max_bits, bits(e.second));
            if (!rows[r].empty()) bucket[rows[r].front().first].push_back(r);
        }
        std::vector<std::size_t>().swap(cand);
        f.pivot_cols.push_back(c);
        f.rows.push_back(std::move(rows[best]));
    }
    return f;
}

}  // namespace

std::size_t exact_rank(const SparseMatrix& m) { return forward_eliminate(m).pivot_cols.size(); }

Echelon reduced_echelon(const SparseMatrix& m) {
    Forward f = forward_eliminate(m);
    const std::size_t n = f.rows.size();
    for (std::size_t j = n; j-- > 0;) {
        std::size_t c = f.pivot_cols[j];
        for (std::size_t k = 0; k < j; ++k) {
            const auto& row = f.rows[k];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, std::size_t col) { return e.first < col; });
            if (it != row.end() && it->first == c) eliminate(f.rows[k], f.rows[j], c);
        }
    }
    Echelon e;
    e.pivot_cols = f.pivot_cols;
    e.stats.rank = n;
    e.stats.max_entry_bits = f.max_bits;
    e.rows.reserve(n);
    for (auto& row : f.rows) {
        Integer lead = row.front().second;
        SparseVector out;
        out.reserve(row.size());
        for (auto& [c, v] : row) {
            Rational q(v, lead);
            q.canonicalize();
            out.emplace_back(c, std::move(q));
        }
        e.rows.push_back(std::move(out));
    }
    return e;
}

std::vector<std::vector<Rational>> exact_nullspace(const SparseMatrix& m) {
    Echelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    // For each free column, the coefficients of the pivot rows in that column.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_free(m.cols());
    for (std::size_t k = 0; k < e.rows.size(); ++k)
        for (const auto& [c, v] : e.rows[k])
            if (!is_pivot[c]) by_free[c].emplace_back(e.pivot_cols[k], v);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (const auto& [pc, x] : by_free[f]) v[pc] = -x;
        auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        Rational s = *first;
        if (s != 1)
            for (auto& q : v) q /= s;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> exact_solve(const SparseMatrix& m,
                                                 const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        aug.set(r, m.cols(), b[r]);
    }
    Echelon e = reduced_echelon(aug);
    std::vector<Rational> x(m.cols());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivot_cols[k] == m.cols()) return std::nullopt;
        const auto& last = e.rows[k].back();
        if (last.first == m.cols()) x[e.pivot_cols[k]] = last.second;
    }
    return x;
}

}  // namespace e7::exact
