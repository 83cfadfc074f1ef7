#include "e7/errata.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7::errata {

using exact::Rational;

const std::vector<Erratum>& registry() {
    static const std::vector<Erratum> r = {
        {"op-0001110", "raising operator for root (0,0,0,1,1,1,0)", "+x18*d28", "+x18*d27", Status::Corrected},
        {"op-0101110", "raising operator for root (0,1,0,1,1,1,0)", "+x18*d30", "+x18*d29", Status::Corrected},
        {"op-0011110", "raising operator for root (0,0,1,1,1,1,0)", "-x16*d28", "-x16*d27", Status::Corrected},
        {"op-1011110", "raising operator for root (1,0,1,1,1,1,0)", "+x12*d28", "+x12*d27", Status::Corrected},
        {"op-0111110", "raising operator for root (0,1,1,1,1,1,0)", "-x16*d30", "-x16*d29", Status::Corrected},
        {"chain-label-23", "adjoint basis chain, 23rd step", "zeta38 = Et1(zeta16)", "zeta23 = Et1(zeta16)",
         Status::Corrected},
        {"chain-source-4", "adjoint basis chain, zeta4", "zeta4 = Et4(zeta2)", "zeta4 = Et4(zeta3)",
         Status::Corrected},
        {"chain-op-41", "adjoint basis chain, zeta41", "zeta41 = Et1(zeta34)", "zeta41 = Et3(zeta34)",
         Status::Corrected},
        {"w-tilde-6", "Et6 action on the adjoint basis", "+zeta16*d_zeta14", "+zeta16*d_zeta12",
         Status::Corrected},
        {"eta-index-4", "index set of the quartic invariant", "4 in I (coefficient +4 on zeta4*zeta130)",
         "4 not in I (coefficient -4 on zeta4*zeta130)", Status::Corrected},
        {"dim-formula-n1", "explicit product formula for dim V(n1 l1 + n2 l6 + n3 l7)", "no factor (n1+4)",
         "extra factor (n1+4)/4", Status::Corrected},
        {"theta-printed", "printed cubic singular vector of weight l7",
         "(x1/2)zeta64 - x2 zeta59 + ... + x40 zeta1 is annihilated by all simple raisings",
         "not annihilated by E_alpha6; the singular space (3, l7) is spanned by d(eta)/dx56 instead",
         Status::NotReproduced},
        {"eta-specialization", "quartic invariant with x3..x54 set to 0",
         "3*x1^2*x56^2 - 6*x1*x2*x55*x56 - 5*x2^2*x55^2", "3*x1^2*x56^2 - 6*x1*x2*x55*x56 + 3*x2^2*x55^2",
         Status::NotReproduced},
    };
    return r;
}

std::string to_string(Status s) { return s == Status::Corrected ? "corrected" : "not-reproduced"; }

const std::vector<OperatorFix>& operator_fixes() {
    static const std::vector<OperatorFix> f = {
        {{0, 0, 0, 1, 1, 1, 0}, {18, 28, 1}, {18, 27, 1}},
        {{0, 1, 0, 1, 1, 1, 0}, {18, 30, 1}, {18, 29, 1}},
        {{0, 0, 1, 1, 1, 1, 0}, {16, 28, -1}, {16, 27, -1}},
        {{1, 0, 1, 1, 1, 1, 0}, {12, 28, 1}, {12, 27, 1}},
        {{0, 1, 1, 1, 1, 1, 0}, {16, 30, -1}, {16, 29, -1}},
    };
    return f;
}

poly::LinDiffOp corrected_operator(const data::OperatorRecord& rec) {
    poly::LinDiffOp op = rec.op;
    for (const auto& fix : operator_fixes()) {
        if (fix.root != rec.root) continue;
        if (op.coefficient(fix.printed.i, fix.printed.j) != fix.printed.c)
            throw std::runtime_error("operator erratum does not match transcription");
        op = op - poly::LinDiffOp::single(fix.printed.i, fix.printed.j, fix.printed.c) +
             poly::LinDiffOp::single(fix.corrected.i, fix.corrected.j, fix.corrected.c);
    }
    return op;
}

const std::vector<ChainFix>& chain_fixes() {
    static const std::vector<ChainFix> f = {
        {3, 4, 4, 3},
        {22, 23, 1, 16},
        {40, 41, 3, 34},
    };
    return f;
}

std::vector<data::ChainRecord> corrected_chain() {
    auto chain = data::zeta_chain();
    for (const auto& fix : chain_fixes()) {
        auto& rec = chain.at(fix.position);
        rec.label = fix.label;
        rec.op = fix.op;
        rec.source = fix.source;
    }
    return chain;
}

const std::vector<WFix>& w_fixes() {
    static const std::vector<WFix> f = {
        {true, 6, {Rational(1), 16, 14}, {Rational(1), 16, 12}},
    };
    return f;
}

std::vector<data::WRecord> corrected_w_action() {
    auto recs = data::w_action();
    for (const auto& fix : w_fixes()) {
        for (auto& rec : recs) {
            if (rec.tilde != fix.tilde || rec.r != fix.r) continue;
            auto it = std::find_if(rec.terms.begin(), rec.terms.end(), [&](const data::WTerm& t) {
                return t.a == fix.printed.a && t.b == fix.printed.b && t.c == fix.printed.c;
            });
            if (it == rec.terms.end()) throw std::runtime_error("W erratum does not match transcription");
            *it = fix.corrected;
        }
    }
    return recs;
}

const std::vector<int>& eta_index_removals() {
    static const std::vector<int> r = {4};
    return r;
}

Rational dim_formula_correction(int n1, int, int) { return exact::make_rational(n1 + 4, 4); }

}  // namespace e7::errata
