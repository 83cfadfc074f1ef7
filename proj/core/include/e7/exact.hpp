#ifndef E7_EXACT_HPP
#define E7_EXACT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace e7::exact {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor from a raw pair is followed by canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Overwrites (r, c); a zero value erases the entry.
    void set(std::size_t r, std::size_t c, const Rational& v);
    // Adds v to (r, c).
    void add(std::size_t r, std::size_t c, const Rational& v);
    Rational get(std::size_t r, std::size_t c) const;

    // Entries of row r, sorted by column, no zeros.
    const SparseVector& row(std::size_t r) const { return data_[r]; }
    std::size_t nonzeros() const;

    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

std::size_t exact_rank(const SparseMatrix& m);

// Basis of {v : m v = 0}. One vector per pivot-free column, in increasing
// column order; each scaled so that its first nonzero coordinate is 1.
std::vector<std::vector<Rational>> exact_nullspace(const SparseMatrix& m);

// Some x with m x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
std::optional<std::vector<Rational>> exact_solve(const SparseMatrix& m,
                                                 const std::vector<Rational>& b);

struct EliminationStats {
    std::size_t rank = 0;
    std::size_t max_entry_bits = 0;
};

// Reduced row echelon form over the rationals: pivot columns ascending and,
// for each, the pivot row scaled to have 1 in its pivot column.
struct Echelon {
    std::vector<std::size_t> pivot_cols;
    std::vector<SparseVector> rows;
    EliminationStats stats;
};

Echelon reduced_echelon(const SparseMatrix& m);

}  // namespace e7::exact

#endif  // E7_EXACT_HPP
