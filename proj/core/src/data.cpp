#include "e7/data.hpp"

#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace e7::data {

using exact::Rational;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

struct Split {
    std::uint64_t declared = 0;
    std::string body;
};

Split split_header(const std::string& content) {
    auto nl = content.find('\n');
    std::string first = content.substr(0, nl);
    Split s;
    const std::string tag = "# fnv1a64 ";
    if (first.rfind(tag, 0) != 0) throw std::runtime_error("data file lacks checksum header");
    s.declared = std::stoull(first.substr(tag.size()), nullptr, 16);
    s.body = nl == std::string::npos ? "" : content.substr(nl + 1);
    return s;
}

const detail::embedded_file& find(const std::string& name) {
    for (const auto& f : detail::embedded_files())
        if (name == f.name) return f;
    throw std::runtime_error("no embedded data file " + name);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// "<head> : <rest>"
std::pair<std::string, std::string> split_colon(const std::string& line) {
    auto p = line.find(" : ");
    if (p == std::string::npos) throw std::runtime_error("malformed data line: " + line);
    return {line.substr(0, p), line.substr(p + 3)};
}

}  // namespace

std::vector<FileInfo> checksums() {
    std::vector<FileInfo> out;
    for (const auto& f : detail::embedded_files()) {
        Split s = split_header(f.content);
        out.push_back({f.name, s.declared, fnv1a64(s.body)});
    }
    return out;
}

const std::string& file(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::string> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    Split s = split_header(find(name).content);
    if (fnv1a64(s.body) != s.declared) throw std::runtime_error("checksum mismatch in data file " + name);
    return cache.emplace(name, std::move(s.body)).first->second;
}

std::vector<std::string> lines(const std::string& name) {
    std::istringstream in(file(name));
    std::vector<std::string> out;
    std::string l;
    while (std::getline(in, l)) {
        if (l.empty() || l[0] == '#') continue;
        out.push_back(l);
    }
    return out;
}

const std::vector<roots::RootVec>& basis_roots() {
    static const auto v = [] {
        std::vector<roots::RootVec> out(57);
        int n = 0;
        for (const auto& l : lines("basis_roots.txt")) {
            auto t = tokens(l);
            if (t.size() != 9) throw std::runtime_error("basis_roots: " + l);
            int i = std::stoi(t[0]);
            for (int k = 0; k < 8; ++k) out.at(i)[k] = std::stoi(t[k + 1]);
            ++n;
        }
        if (n != 56) throw std::runtime_error("basis_roots: expected 56 rows");
        return out;
    }();
    return v;
}

namespace {

// "+x6d8" "-x12d16"
poly::LinDiffOp parse_compact_op(const std::string& s) {
    static const std::regex re(R"(([+-])x(\d+)d(\d+))");
    std::vector<poly::LinDiffOp::Term> terms;
    for (const auto& t : tokens(s)) {
        std::smatch m;
        if (!std::regex_match(t, m, re)) throw std::runtime_error("operator term: " + t);
        terms.push_back({std::stoi(m[2]), std::stoi(m[3]), Rational(m[1] == "-" ? -1 : 1)});
    }
    return poly::LinDiffOp::from_terms(std::move(terms));
}

// "+x1x17" "-x6x7"
poly::Polynomial parse_compact_quadratic(const std::string& s) {
    static const std::regex re(R"(([+-])x(\d+)x(\d+))");
    std::vector<poly::Term> terms;
    for (const auto& t : tokens(s)) {
        std::smatch m;
        if (!std::regex_match(t, m, re)) throw std::runtime_error("quadratic term: " + t);
        terms.emplace_back(poly::Monomial::from_vars({std::stoi(m[2]), std::stoi(m[3])}),
                           Rational(m[1] == "-" ? -1 : 1));
    }
    return poly::accumulate(std::move(terms));
}

// "+z1d2" "-2z58d70"
std::vector<WTerm> parse_w_terms(const std::string& s) {
    static const std::regex re(R"(([+-])(\d*)z(\d+)d(\d+))");
    std::vector<WTerm> out;
    for (const auto& t : tokens(s)) {
        std::smatch m;
        if (!std::regex_match(t, m, re)) throw std::runtime_error("W term: " + t);
        long c = m[2].length() ? std::stol(m[2]) : 1;
        if (m[1] == "-") c = -c;
        out.push_back({Rational(c), std::stoi(m[3]), std::stoi(m[4])});
    }
    return out;
}

// "+1/2*x1*z64" or "-1*z2*z12"
std::vector<ProductTerm> parse_products(const std::string& s, char first) {
    std::string pat = std::string(R"(([+-])(\d+(?:/\d+)?)\*)") + first + R"((\d+)\*z(\d+))";
    const std::regex re(pat);
    std::vector<ProductTerm> out;
    for (const auto& t : tokens(s)) {
        std::smatch m;
        if (!std::regex_match(t, m, re)) throw std::runtime_error("product term: " + t);
        Rational c = exact::parse_rational(m[2]);
        if (m[1] == "-") c = -c;
        out.push_back({c, std::stoi(m[3]), std::stoi(m[4])});
    }
    return out;
}

std::vector<std::array<int, 7>> parse_table(const std::string& name, int rows) {
    std::vector<std::array<int, 7>> out(rows + 1);
    int n = 0;
    for (const auto& l : lines(name)) {
        auto t = tokens(l);
        if (t.size() != 8) throw std::runtime_error(name + ": " + l);
        int i = std::stoi(t[0]);
        for (int k = 0; k < 7; ++k) out.at(i)[k] = std::stoi(t[k + 1]);
        ++n;
    }
    if (n != rows) throw std::runtime_error(name + ": wrong row count");
    return out;
}

}  // namespace

const std::vector<OperatorRecord>& printed_raising_operators() {
    static const auto v = [] {
        std::vector<OperatorRecord> out;
        for (const auto& l : lines("raising_operators.txt")) {
            auto [head, rest] = split_colon(l);
            auto t = tokens(head);
            if (t.size() != 7) throw std::runtime_error("raising_operators: " + l);
            OperatorRecord r;
            for (int k = 0; k < 7; ++k) r.root[k] = std::stoi(t[k]);
            r.op = parse_compact_op(rest);
            out.push_back(std::move(r));
        }
        return out;
    }();
    return v;
}

const std::vector<std::array<int, 7>>& cartan_eigenvalues() {
    static const auto v = parse_table("cartan_eigenvalues.txt", 28);
    return v;
}

const std::vector<std::array<int, 7>>& zeta_weights() {
    static const auto v = parse_table("zeta_weights.txt", 63);
    return v;
}

const std::vector<ChainRecord>& zeta_chain() {
    static const auto v = [] {
        std::vector<ChainRecord> out;
        for (const auto& l : lines("zeta_chain.txt")) {
            auto [head, rest] = split_colon(l);
            auto t = tokens(head);
            if (t.size() != 3) throw std::runtime_error("zeta_chain: " + l);
            ChainRecord r;
            r.label = std::stoi(t[0]);
            r.op = t[1] == "-" ? 0 : std::stoi(t[1]);
            r.source = t[2] == "-" ? 0 : std::stoi(t[2]);
            r.value = parse_compact_quadratic(rest);
            out.push_back(std::move(r));
        }
        return out;
    }();
    return v;
}

const std::vector<WRecord>& w_action() {
    static const auto v = [] {
        std::vector<WRecord> out;
        for (const auto& l : lines("w_action.txt")) {
            auto [head, rest] = split_colon(l);
            auto t = tokens(head);
            if (t.size() != 2 || (t[0] != "E" && t[0] != "Et")) throw std::runtime_error("w_action: " + l);
            out.push_back({t[0] == "Et", std::stoi(t[1]), parse_w_terms(rest)});
        }
        return out;
    }();
    return v;
}

const std::vector<WFullRecord>& w_full() {
    static const auto v = [] {
        std::vector<WFullRecord> out;
        for (const auto& l : lines("w_full.txt")) {
            auto [head, rest] = split_colon(l);
            auto t = tokens(head);
            if (t.size() != 2 || (t[1] != "+" && t[1] != "-")) throw std::runtime_error("w_full: " + l);
            out.push_back({std::stoi(t[0]), t[1] == "+" ? 1 : -1, parse_w_terms(rest)});
        }
        return out;
    }();
    return v;
}

const InvariantFormulas& invariant_formulas() {
    static const auto v = [] {
        InvariantFormulas f;
        for (const auto& l : lines("invariants.txt")) {
            auto [key, rest] = split_colon(l);
            if (key == "theta") {
                f.theta = parse_products(rest, 'x');
            } else if (key == "sigma") {
                f.sigma = parse_products(rest, 'z');
            } else if (key == "eta_cartan") {
                f.eta_cartan = parse_products(rest, 'z');
            } else if (key == "eta_pair_coeff") {
                f.eta_pair_coeff = exact::parse_rational(rest);
            } else if (key == "eta_index_set") {
                for (const auto& t : tokens(rest)) {
                    auto dots = t.find("..");
                    if (dots == std::string::npos) {
                        f.eta_index_set.push_back(std::stoi(t));
                    } else {
                        int lo = std::stoi(t.substr(0, dots));
                        int hi = std::stoi(t.substr(dots + 2));
                        for (int i = lo; i <= hi; ++i) f.eta_index_set.push_back(i);
                    }
                }
            } else {
                throw std::runtime_error("invariants: unknown key " + key);
            }
        }
        return f;
    }();
    return v;
}

}  // namespace e7::data
