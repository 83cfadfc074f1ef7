#ifndef E7_ERRATA_HPP
#define E7_ERRATA_HPP

#include <array>
#include <string>
#include <vector>

#include "e7/data.hpp"
#include "e7/poly.hpp"

// Corrections applied to transcribed source data, and printed claims that
// the computation does not reproduce. Every entry is carried into reports.
namespace e7::errata {

enum class Status { Corrected, NotReproduced };

struct Erratum {
    std::string id;
    std::string subject;
    std::string printed;
    std::string applied;
    Status status;
};

const std::vector<Erratum>& registry();
std::string to_string(Status s);

struct OperatorFix {
    std::array<int, 7> root;
    poly::LinDiffOp::Term printed;
    poly::LinDiffOp::Term corrected;
};
const std::vector<OperatorFix>& operator_fixes();
// Printed operator with the registered fixes applied.
poly::LinDiffOp corrected_operator(const data::OperatorRecord& rec);

struct ChainFix {
    int position;  // 0-based line of the chain table
    int label;
    int op;
    int source;
};
const std::vector<ChainFix>& chain_fixes();
// Chain with labels, operators and sources corrected.
std::vector<data::ChainRecord> corrected_chain();

struct WFix {
    bool tilde;
    int r;
    data::WTerm printed;
    data::WTerm corrected;
};
const std::vector<WFix>& w_fixes();
std::vector<data::WRecord> corrected_w_action();

// Indices dropped from the printed index set of the quartic invariant.
const std::vector<int>& eta_index_removals();

// Factor missing from the printed product formula for dim V(n1 l1 + n2 l6 + n3 l7).
exact::Rational dim_formula_correction(int n1, int n2, int n3);

}  // namespace e7::errata

#endif  // E7_ERRATA_HPP
