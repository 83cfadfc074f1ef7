#ifndef E7_DATA_HPP
#define E7_DATA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "e7/exact.hpp"
#include "e7/poly.hpp"
#include "e7/roots.hpp"

// Transcribed tables, compiled into the library. Each file starts with
// `# fnv1a64 <hex>` computed over everything after that first line.
namespace e7::data {

namespace detail {
struct embedded_file {
    const char* name;
    const char* content;
};
const std::vector<embedded_file>& embedded_files();
}  // namespace detail

std::uint64_t fnv1a64(const std::string& s);

struct FileInfo {
    std::string name;
    std::uint64_t declared = 0;
    std::uint64_t actual = 0;
    bool ok() const { return declared == actual; }
};

std::vector<FileInfo> checksums();
// Raw text; throws if the checksum does not match.
const std::string& file(const std::string& name);

// Data lines (comments and blank lines removed).
std::vector<std::string> lines(const std::string& name);

// x_i = E_beta_i, i = 1..56 (index 0 unused).
const std::vector<roots::RootVec>& basis_roots();

struct OperatorRecord {
    std::array<int, 7> root;  // positive E7 root over alpha_1..alpha_7
    poly::LinDiffOp op;
};
// The 63 printed raising operators, verbatim.
const std::vector<OperatorRecord>& printed_raising_operators();

// Table 1 rows a_{i,r}, i = 1..28; Table 2 rows b_{i,r}, i = 1..63 (index 0 unused).
const std::vector<std::array<int, 7>>& cartan_eigenvalues();
const std::vector<std::array<int, 7>>& zeta_weights();

struct ChainRecord {
    int label;   // as printed
    int op;      // 0 for the seed
    int source;  // 0 for the seed
    poly::Polynomial value;
};
const std::vector<ChainRecord>& zeta_chain();

struct WTerm {
    exact::Rational c;
    int a;  // coefficient on zeta_a ...
    int b;  // ... of the image of zeta_b
};
struct WRecord {
    bool tilde;
    int r;
    std::vector<WTerm> terms;
};
const std::vector<WRecord>& w_action();

struct WFullRecord {
    int r;
    int mirror_sign;  // +1 or -1
    std::vector<WTerm> extras;
};
const std::vector<WFullRecord>& w_full();

struct ProductTerm {
    exact::Rational c;
    int a;
    int b;
};
struct InvariantFormulas {
    std::vector<ProductTerm> theta;  // c * x_a * zeta_b
    std::vector<ProductTerm> sigma;  // c * zeta_a * zeta_b
    std::vector<int> eta_index_set;
    exact::Rational eta_pair_coeff;
    std::vector<ProductTerm> eta_cartan;  // c * zeta_a * zeta_b
};
const InvariantFormulas& invariant_formulas();

}  // namespace e7::data

#endif  // E7_DATA_HPP
