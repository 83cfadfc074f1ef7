#ifndef E7_ROOTS_HPP
#define E7_ROOTS_HPP

#include <array>
#include <string>
#include <vector>

#include "e7/exact.hpp"

namespace e7::roots {

// Coefficients k1..k8 over the simple roots alpha_1..alpha_8 of E8.
using RootVec = std::array<int, 8>;

enum class System { E7, E8 };

// (alpha_i, alpha_j): 2 on the diagonal, -1 on the edges
// 1-3, 3-4, 2-4, 4-5, 5-6, 6-7, 7-8.
const std::array<std::array<int, 8>, 8>& gram();

int inner(const RootVec& a, const RootVec& b);
RootVec add(const RootVec& a, const RootVec& b);
RootVec sub(const RootVec& a, const RootVec& b);
RootVec neg(const RootVec& a);
RootVec simple_root(int i);  // 1-based
int height(const RootVec& a);

bool is_root(const RootVec& a);
// Last nonzero coefficient positive.
bool is_positive(const RootVec& a);

// All norm-2 lattice vectors in the box [-6, 6]^8 (restricted to k8 = 0 for
// E7), sorted lexicographically on coordinates.
std::vector<RootVec> enumerate_roots(System s);
std::vector<RootVec> positive_roots(System s);

// (-1)^(sum k_i l_i + sum_{i>j} k_i l_j (alpha_i, alpha_j))
int cocycle_F(const RootVec& a, const RootVec& b);

struct WeightVec {
    std::array<int, 7> fund{};
    std::array<exact::Rational, 7> root{};

    bool dominant() const;
    bool operator==(const WeightVec& o) const { return fund == o.fund; }
};

WeightVec weight_from_fund(const std::array<int, 7>& fund);
// Weight of an E7 root; k8 must be 0.
WeightVec weight_of_root(const RootVec& a);

// lambda_1..lambda_7 of E7, expansions over alpha_1..alpha_7 filled in.
const std::vector<WeightVec>& fundamental_weights_e7();

// (lambda, mu) for weights given in fundamental coordinates.
exact::Rational weight_inner(const WeightVec& a, const WeightVec& b);

std::string to_string(const RootVec& a);
std::string to_string(const std::array<int, 7>& fund);

}  // namespace e7::roots

#endif  // E7_ROOTS_HPP
