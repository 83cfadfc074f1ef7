#include "e7/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e7::roots {

using exact::Rational;

const std::array<std::array<int, 8>, 8>& gram() {
    static const auto g = [] {
        std::array<std::array<int, 8>, 8> m{};
        for (int i = 0; i < 8; ++i) m[i][i] = 2;
        const int edges[7][2] = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
        for (const auto& e : edges) {
            m[e[0] - 1][e[1] - 1] = -1;
            m[e[1] - 1][e[0] - 1] = -1;
        }
        return m;
    }();
    return g;
}

int inner(const RootVec& a, const RootVec& b) {
    const auto& g = gram();
    int s = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) s += a[i] * g[i][j] * b[j];
    return s;
}

RootVec add(const RootVec& a, const RootVec& b) {
    RootVec r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
    return r;
}

RootVec sub(const RootVec& a, const RootVec& b) {
    RootVec r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
    return r;
}

RootVec neg(const RootVec& a) {
    RootVec r;
    for (int i = 0; i < 8; ++i) r[i] = -a[i];
    return r;
}

RootVec simple_root(int i) {
    if (i < 1 || i > 8) throw std::out_of_range("simple root index");
    RootVec r{};
    r[i - 1] = 1;
    return r;
}

int height(const RootVec& a) {
    int h = 0;
    for (int k : a) h += k;
    return h;
}

bool is_root(const RootVec& a) { return inner(a, a) == 2; }

bool is_positive(const RootVec& a) {
    for (int i = 7; i >= 0; --i)
        if (a[i] != 0) return a[i] > 0;
    return false;
}

namespace {

// Fincke-Pohst style search for x with x^T G x = 2 inside the box, using the
// Cholesky factor of G for pruning and exact integer arithmetic for the
// final test.
std::vector<RootVec> norm_two_vectors(int dims) {
    const auto& g = gram();
    std::array<std::array<double, 8>, 8> q{};
    // q[i][i] = d_i, q[i][j] = mu_ij (j > i) with G = sum d_i (x_i + sum mu_ij x_j)^2
    std::array<std::array<double, 8>, 8> a{};
    for (int i = 0; i < dims; ++i)
        for (int j = 0; j < dims; ++j) a[i][j] = g[i][j];
    for (int i = 0; i < dims; ++i) {
        q[i][i] = a[i][i];
        for (int j = i + 1; j < dims; ++j) q[i][j] = a[i][j] / a[i][i];
        for (int k = i + 1; k < dims; ++k)
            for (int l = k; l < dims; ++l) a[k][l] -= a[i][k] * a[i][l] / a[i][i];
        for (int k = i + 1; k < dims; ++k)
            for (int l = k; l < dims; ++l) a[l][k] = a[k][l];
    }
    const double bound = 2.0 + 1e-9;
    std::vector<RootVec> out;
    RootVec x{};
    std::array<double, 9> partial{};  // partial[i]: contribution of coords i..dims-1
    auto rec = [&](auto&& self, int i) -> void {
        double centre = 0;
        for (int j = i + 1; j < dims; ++j) centre -= q[i][j] * x[j];
        double rem = bound - partial[i + 1];
        if (rem < 0) return;
        double span = std::sqrt(rem / q[i][i]);
        int lo = std::max(-6, static_cast<int>(std::ceil(centre - span - 1e-9)));
        int hi = std::min(6, static_cast<int>(std::floor(centre + span + 1e-9)));
        for (int v = lo; v <= hi; ++v) {
            x[i] = v;
            double t = v - centre;
            partial[i] = partial[i + 1] + q[i][i] * t * t;
            if (partial[i] > bound) continue;
            if (i == 0) {
                if (inner(x, x) == 2) out.push_back(x);
            } else {
                self(self, i - 1);
            }
        }
        x[i] = 0;
    };
    partial[dims] = 0;
    rec(rec, dims - 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<RootVec> enumerate_roots(System s) {
    return norm_two_vectors(s == System::E8 ? 8 : 7);
}

std::vector<RootVec> positive_roots(System s) {
    std::vector<RootVec> out;
    for (const auto& r : enumerate_roots(s))
        if (is_positive(r)) out.push_back(r);
    return out;
}

int cocycle_F(const RootVec& a, const RootVec& b) {
    const auto& g = gram();
    long e = 0;
    for (int i = 0; i < 8; ++i) e += static_cast<long>(a[i]) * b[i];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < i; ++j) e += static_cast<long>(a[i]) * b[j] * g[i][j];
    return (e % 2 == 0) ? 1 : -1;
}

namespace {

// Inverse of the E7 Cartan matrix, row i = lambda_i over alpha_1..alpha_7.
std::array<std::array<Rational, 7>, 7> inverse_cartan_e7() {
    const auto& g = gram();
    std::array<std::array<Rational, 14>, 7> m;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 14; ++j) m[i][j] = j < 7 ? Rational(g[i][j]) : Rational(j - 7 == i ? 1 : 0);
    for (int c = 0; c < 7; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rational piv = m[c][c];
        for (auto& v : m[c]) v /= piv;
        for (int r = 0; r < 7; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int j = 0; j < 14; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::array<std::array<Rational, 7>, 7> inv;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) inv[i][j] = m[i][j + 7];
    return inv;
}

}  // namespace

bool WeightVec::dominant() const {
    return std::all_of(fund.begin(), fund.end(), [](int v) { return v >= 0; });
}

WeightVec weight_from_fund(const std::array<int, 7>& fund) {
    static const auto inv = inverse_cartan_e7();
    WeightVec w;
    w.fund = fund;
    for (int j = 0; j < 7; ++j) {
        Rational s = 0;
        for (int i = 0; i < 7; ++i) s += fund[i] * inv[i][j];
        w.root[j] = s;
    }
    return w;
}

WeightVec weight_of_root(const RootVec& a) {
    if (a[7] != 0) throw std::invalid_argument("not an E7 lattice vector");
    std::array<int, 7> f{};
    for (int r = 0; r < 7; ++r) f[r] = inner(simple_root(r + 1), a);
    return weight_from_fund(f);
}

const std::vector<WeightVec>& fundamental_weights_e7() {
    static const auto ws = [] {
        std::vector<WeightVec> v;
        for (int i = 0; i < 7; ++i) {
            std::array<int, 7> f{};
            f[i] = 1;
            v.push_back(weight_from_fund(f));
        }
        return v;
    }();
    return ws;
}

Rational weight_inner(const WeightVec& a, const WeightVec& b) {
    // (lambda, alpha_j) = fund_j, so (a, b) = sum_j a.root_j * b.fund_j.
    Rational s = 0;
    for (int j = 0; j < 7; ++j) s += a.root[j] * b.fund[j];
    return s;
}

std::string to_string(const RootVec& a) {
    std::string s;
    for (int i = 0; i < 8; ++i) {
        if (i) s += ' ';
        s += std::to_string(a[i]);
    }
    return s;
}

std::string to_string(const std::array<int, 7>& fund) {
    std::string s;
    for (int i = 0; i < 7; ++i) {
        if (i) s += ',';
        s += std::to_string(fund[i]);
    }
    return s;
}

}  // namespace e7::roots
