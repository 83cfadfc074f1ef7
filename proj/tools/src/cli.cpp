#include "e7/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "e7/data.hpp"
#include "e7/dims.hpp"
#include "e7/errata.hpp"
#include "e7/pde.hpp"
#include "e7/rep.hpp"
#include "e7/roots.hpp"
#include "e7/singular.hpp"
#include "e7/zeta.hpp"

namespace e7::cli {

namespace {

using nlohmann::json;

std::array<int, 7> parse_weight(const std::string& text) {
    std::array<int, 7> w{};
    std::stringstream ss(text);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= 7) throw CLI::ValidationError("--weight", "expected 7 comma-separated integers");
        try {
            std::size_t used = 0;
            w[k++] = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weight", "not an integer: " + item);
        }
    }
    if (k != 7) throw CLI::ValidationError("--weight", "expected 7 comma-separated integers");
    return w;
}

json errata_json() {
    json a = json::array();
    for (const auto& e : errata::registry())
        a.push_back({{"id", e.id},
                     {"subject", e.subject},
                     {"printed", e.printed},
                     {"applied", e.applied},
                     {"status", errata::to_string(e.status)}});
    return a;
}

void print_summary(const VerificationReport& rep, std::ostream& out) {
    out << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.checks_run << " checks, "
        << rep.failures.size() << " failures)\n";
    for (const auto& [k, v] : rep.facts) out << "  " << k << " = " << v << "\n";
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
        if (shown++ == 10) {
            out << "  ... " << rep.failures.size() - 10 << " more failures\n";
            break;
        }
        out << "  failed " << f.id << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
    }
}

struct Options {
    std::string json_path;
    // roots
    std::string system = "e8";
    bool positive = false;
    // rep
    bool exhaustive = false;
    std::size_t pairs = 500;
    std::uint64_t seed = 20240601;
    // singular / dims
    int degree = 0;
    std::string weight;
    bool sweep = false;
    std::string formula;
    int grid = 3;
    // invariant
    std::string name;
    std::string emit;
    std::string source = "nullspace";
    // identity / decompose / verify-all
    int max_degree = -1;
    // pde
    std::vector<int> check;
    int budget = pde::kDefaultBudget;
    bool audit = false;
    int pde_sweep = -1;
    bool dual_eta = false;
};

VerificationReport cmd_roots(const Options& o, std::ostream& out) {
    VerificationReport rep;
    rep.suite = "roots";
    auto sys = o.system == "e7" ? roots::System::E7 : roots::System::E8;
    auto list = o.positive ? roots::positive_roots(sys) : roots::enumerate_roots(sys);
    for (const auto& r : list) out << roots::to_string(r) << "\n";
    std::size_t want = (sys == roots::System::E7 ? 126 : 240) / (o.positive ? 2 : 1);
    rep.check(list.size() == want, "count", std::to_string(list.size()));
    rep.fact("count", std::to_string(list.size()));
    return rep;
}

VerificationReport cmd_rep_verify(const Options& o) {
    rep::VerifyOptions vo;
    vo.exhaustive = o.exhaustive;
    vo.random_pairs = o.pairs;
    vo.seed = o.seed;
    const auto& t = rep::full_rep();
    auto r = rep::verify_rep(t, vo);
    std::size_t rank = rep::operator_span_rank(t);
    r.check(rank == 133, "operator span rank", std::to_string(rank));
    r.fact("operator_span_rank", std::to_string(rank));
    return r;
}

VerificationReport cmd_rep_golden() {
    VerificationReport all;
    all.suite = "rep-golden";
    auto g = rep::compare_with_printed(rep::full_rep());
    VerificationReport ops;
    ops.suite = "operators";
    ops.check(g.matched_corrected == 63, "generated vs corrected transcription",
              std::to_string(g.matched_corrected) + "/63");
    ops.check(g.diff_equals_errata, "verbatim differences are the registered errata");
    ops.fact("matched_corrected", std::to_string(g.matched_corrected) + "/" + std::to_string(g.compared));
    ops.fact("matched_verbatim", std::to_string(g.matched_verbatim) + "/" + std::to_string(g.compared));
    ops.fact("verbatim_diff_terms", std::to_string(g.verbatim_diff_terms));
    all.absorb(ops);
    const auto& z = zeta::zeta_basis();
    all.absorb(zeta::check_chain(z));
    all.absorb(zeta::check_weights(z));
    VerificationReport rk;
    rk.suite = "zeta-rank";
    std::size_t rank = zeta::zeta_rank(z);
    rk.check(rank == 133, "rank", std::to_string(rank));
    rk.fact("rank", std::to_string(rank));
    all.absorb(rk);
    all.absorb(zeta::golden_check_w_action(z));
    all.absorb(zeta::check_full_w_action(z));
    return all;
}

VerificationReport cmd_singular(const Options& o, std::ostream& out) {
    if (o.sweep) return singular::dominant_sweep(o.degree);
    VerificationReport rep;
    rep.suite = "singular";
    auto w = parse_weight(o.weight);
    auto s = singular::singular_space(o.degree, w);
    out << "dimension " << s.basis.size() << " (weight space " << s.weight_space_size << ")\n";
    for (const auto& f : s.basis) {
        out << poly::to_string(f) << "\n";
        rep.check(singular::simple_failures(f).empty(), "annihilated");
    }
    rep.fact("dimension", std::to_string(s.basis.size()));
    rep.fact("weight_space", std::to_string(s.weight_space_size));
    rep.fact("expected", std::to_string(singular::expected_singular_count(o.degree, w)));
    return rep;
}

VerificationReport cmd_invariant(const Options& o, std::ostream& out) {
    VerificationReport rep;
    rep.suite = "invariant-" + o.name;
    poly::Polynomial solved, printed;
    if (o.name == "zeta1") {
        solved = singular::solved_zeta1();
        printed = singular::golden_zeta1();
    } else if (o.name == "theta") {
        solved = singular::solved_theta();
        printed = singular::golden_theta();
    } else if (o.name == "sigma") {
        solved = singular::solved_sigma();
        printed = singular::golden_sigma();
    } else {
        solved = singular::solved_eta();
        printed = singular::golden_eta();
    }
    const auto& f = o.source == "printed" ? printed : solved;
    rep.check(solved.is_homogeneous(), "homogeneous");
    rep.check(singular::simple_failures(solved).empty(), "nullspace vector annihilated");
    auto ratio = singular::proportionality(solved, printed);
    rep.fact("source", o.source);
    rep.fact("terms", std::to_string(f.size()));
    rep.fact("degree", std::to_string(f.degree()));
    rep.fact("printed_proportional", ratio ? "yes, ratio " + exact::to_string(*ratio) : "no");
    auto bad = singular::simple_failures(f);
    std::string b;
    for (int r : bad) b += (b.empty() ? "" : ",") + std::to_string(r);
    rep.fact("nonannihilating_simple_roots", b.empty() ? "none" : b);
    if (o.source == "printed") rep.check(bad.empty(), "printed construction annihilated", "fails for alpha " + b);
    rep.fact("edge_specialization", poly::to_string(singular::specialize_edge(f)));
    if (!o.emit.empty()) {
        std::ofstream file(o.emit);
        if (!file) throw std::runtime_error("cannot write " + o.emit);
        file << poly::to_string(f) << "\n";
        out << "wrote " << f.size() << " terms to " << o.emit << "\n";
    }
    return rep;
}

VerificationReport cmd_dims(const Options& o, std::ostream& out) {
    if (!o.weight.empty()) {
        VerificationReport rep;
        rep.suite = "dims-weyl";
        auto w = parse_weight(o.weight);
        std::string d = dims::weyl_dim(w).get_str();
        out << d << "\n";
        rep.fact("dim", d);
        return rep;
    }
    if (!o.formula.empty()) {
        VerificationReport rep;
        rep.suite = "dims-formula";
        std::array<int, 3> n{};
        std::stringstream ss(o.formula);
        std::string item;
        int k = 0;
        while (std::getline(ss, item, ',')) {
            if (k >= 3) throw CLI::ValidationError("--formula", "expected n1,n2,n3");
            n[k++] = std::stoi(item);
        }
        if (k != 3 || n[0] < 0 || n[1] < 0 || n[2] < 0)
            throw CLI::ValidationError("--formula", "expected nonnegative n1,n2,n3");
        auto w = dims::weyl_dim_l1l6l7(n[0], n[1], n[2]);
        auto c = dims::explicit_dim_formula(n[0], n[1], n[2]);
        auto v = dims::explicit_dim_formula(n[0], n[1], n[2], dims::FormulaReading::Verbatim);
        out << "weyl " << w.get_str() << "\nformula " << exact::to_string(c) << "\nformula_verbatim "
            << exact::to_string(v) << "\n";
        rep.check(c == exact::Rational(w), "formula agrees with weyl_dim");
        rep.fact("weyl", w.get_str());
        rep.fact("formula", exact::to_string(c));
        rep.fact("formula_verbatim", exact::to_string(v));
        return rep;
    }
    return dims::dims_report(o.max_degree < 0 ? 10 : o.max_degree, 12, o.grid);
}

VerificationReport cmd_identity(const Options& o, std::ostream& out) {
    VerificationReport rep;
    rep.suite = "identity";
    int n = o.max_degree < 0 ? 12 : o.max_degree;
    auto s = dims::series_identity_check(n);
    std::string text;
    for (const auto& c : s.coeffs) text += (text.empty() ? "" : " ") + c.get_str();
    out << text << "\n";
    rep.check(s.passed, "coefficients", text);
    rep.fact("coeffs", text);
    return rep;
}

VerificationReport cmd_decompose(const Options& o, std::ostream& out) {
    VerificationReport rep;
    rep.suite = "decompose";
    int lo = o.max_degree >= 0 ? 0 : o.degree;
    int hi = o.max_degree >= 0 ? o.max_degree : o.degree;
    for (int d = lo; d <= hi; ++d) {
        auto r = dims::decomposition_check(d);
        out << "d=" << d << " sum " << r.sum.get_str() << " binomial " << r.binomial.get_str()
            << (r.passed() ? " ok" : " MISMATCH") << "\n";
        rep.check(r.passed(), "d=" + std::to_string(d), r.sum.get_str() + " vs " + r.binomial.get_str());
    }
    return rep;
}

VerificationReport cmd_pde(const Options& o, std::ostream& out) {
    if (o.audit) return pde::weight_shift_audit();
    if (o.pde_sweep >= 0) return pde::annihilation_sweep(o.pde_sweep);
    VerificationReport rep;
    rep.suite = "pde";
    if (o.dual_eta || o.check.empty()) {
        auto d = pde::dual_of_eta();
        out << "D(eta) = " << poly::to_string(d) << "\n";
        rep.check(d.size() == 1 && d.degree() == 0, "D(eta) is a nonzero constant", poly::to_string(d));
        rep.fact("D(eta)", poly::to_string(d));
    }
    if (!o.check.empty()) {
        if (o.check.size() != 4) throw CLI::ValidationError("--check", "expected m1 m2 m3 eps");
        auto r = pde::check_annihilation(o.check[0], o.check[1], o.check[2], o.check[3], o.budget);
        out << "degree " << r.degree << ", input terms " << r.input_terms << ", D(f) terms " << r.output_terms
            << (r.zero() ? " ok" : " NONZERO") << "\n";
        rep.check(r.zero(), "annihilation", std::to_string(r.output_terms) + " surviving terms");
        rep.fact("degree", std::to_string(r.degree));
        rep.fact("input_terms", std::to_string(r.input_terms));
    }
    return rep;
}

VerificationReport cmd_verify_all(const Options& o, std::ostream& out) {
    VerificationReport all;
    all.suite = "verify-all";
    int pde_degree = o.max_degree < 0 ? 8 : o.max_degree;
    std::vector<VerificationReport> parts;
    parts.push_back(cmd_rep_verify(o));
    parts.push_back(cmd_rep_golden());
    for (int d = 0; d <= 4; ++d) parts.push_back(singular::dominant_sweep(d));
    {
        Options id = o;
        id.max_degree = 10;
        std::ostringstream sink;
        parts.push_back(cmd_identity(id, sink));
        Options dc = o;
        dc.max_degree = 10;
        parts.push_back(cmd_decompose(dc, sink));
    }
    parts.push_back(pde::annihilation_sweep(pde_degree));
    parts.push_back(pde::weight_shift_audit());
    for (const auto& p : parts) {
        print_summary(p, out);
        all.absorb(p);
    }
    for (const auto& e : errata::registry())
        if (e.status == errata::Status::NotReproduced) out << "not reproduced: " << e.id << " (" << e.subject << ")\n";
    return all;
}

}  // namespace

json report_json(const VerificationReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back({{"id", f.id}, {"detail", f.detail}});
    json facts = json::object();
    for (const auto& [k, v] : rep.facts) facts[k] = v;
    return {{"suite", rep.suite},
            {"passed", rep.passed()},
            {"checks_run", rep.checks_run},
            {"failures", failures},
            {"facts", facts},
            {"wall_time", rep.wall_time},
            {"errata", errata_json()}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the 56-dimensional E7 module", "e7tool"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--json", o.json_path, "Write a JSON report to this file");

    auto* roots_cmd = app.add_subcommand("roots", "List E7 or E8 roots, one per line as k1 .. k8");
    roots_cmd->add_option("--system", o.system)->check(CLI::IsMember({"e7", "e8"}));
    roots_cmd->add_flag("--positive", o.positive);

    auto* rep_cmd = app.add_subcommand("rep", "Representation checks");
    rep_cmd->require_subcommand(1);
    rep_cmd->fallthrough();
    auto* verify_cmd = rep_cmd->add_subcommand("verify", "Bracket relations of the operator table");
    verify_cmd->add_flag("--exhaustive", o.exhaustive, "All root pairs instead of a sample");
    verify_cmd->add_option("--pairs", o.pairs, "Random root pairs");
    verify_cmd->add_option("--seed", o.seed);
    auto* golden_cmd = rep_cmd->add_subcommand("golden", "Generated data against the transcribed tables");

    auto* sing_cmd = app.add_subcommand("singular", "Singular vectors of a given degree and weight");
    sing_cmd->add_option("--degree", o.degree)->required()->check(CLI::Range(0, 8));
    sing_cmd->add_option("--weight", o.weight, "n1,...,n7 in fundamental weights");
    sing_cmd->add_flag("--sweep", o.sweep, "All dominant weights of the degree");

    auto* inv_cmd = app.add_subcommand("invariant", "Construct zeta1, theta, sigma or eta");
    inv_cmd->add_option("name", o.name)->required()->check(CLI::IsMember({"zeta1", "theta", "sigma", "eta"}));
    inv_cmd->add_option("--emit", o.emit, "Write the expanded polynomial to this file");
    inv_cmd->add_option("--source", o.source)->check(CLI::IsMember({"nullspace", "printed"}));

    auto* dims_cmd = app.add_subcommand("dims", "Dimensions of irreducible modules");
    dims_cmd->add_option("--weight", o.weight, "n1,...,n7: print the Weyl dimension");
    dims_cmd->add_option("--formula", o.formula, "n1,n2,n3: compare the product formula with weyl_dim");
    dims_cmd->add_option("--grid", o.grid)->check(CLI::Range(0, 8));
    dims_cmd->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 40));

    auto* id_cmd = app.add_subcommand("identity", "Series (1-q)^55 sum dim q^deg");
    id_cmd->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 40));

    auto* dec_cmd = app.add_subcommand("decompose", "Dimension count of degree-d polynomials");
    auto* dopt = dec_cmd->add_option("--degree", o.degree)->check(CLI::Range(0, 40));
    auto* mopt = dec_cmd->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 40));
    dopt->excludes(mopt);

    auto* pde_cmd = app.add_subcommand("pde", "Dual operator of the quartic invariant");
    pde_cmd->add_option("--check", o.check, "m1 m2 m3 eps")->expected(4);
    pde_cmd->add_option("--budget", o.budget, "Largest product degree")->check(CLI::Range(0, 16));
    pde_cmd->add_flag("--audit", o.audit, "Exponent bookkeeping audit");
    pde_cmd->add_option("--sweep", o.pde_sweep, "All cases up to this product degree")->check(CLI::Range(0, 16));
    pde_cmd->add_flag("--eta", o.dual_eta, "Print D(eta)");

    auto* all_cmd = app.add_subcommand("verify-all", "Run every verification suite");
    all_cmd->add_option("--max-degree", o.max_degree, "Product degree of the pde sweep")->check(CLI::Range(0, 10));

    auto* errata_cmd = app.add_subcommand("errata", "List corrections and unreproduced claims");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kPass;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    if (sing_cmd->parsed() && !o.sweep && o.weight.empty()) {
        err << "error: singular needs --weight or --sweep\n";
        return kUsage;
    }

    VerificationReport rep;
    try {
        if (roots_cmd->parsed()) rep = cmd_roots(o, out);
        else if (verify_cmd->parsed()) rep = cmd_rep_verify(o);
        else if (golden_cmd->parsed()) rep = cmd_rep_golden();
        else if (sing_cmd->parsed()) rep = cmd_singular(o, out);
        else if (inv_cmd->parsed()) rep = cmd_invariant(o, out);
        else if (dims_cmd->parsed()) rep = cmd_dims(o, out);
        else if (id_cmd->parsed()) rep = cmd_identity(o, out);
        else if (dec_cmd->parsed()) rep = cmd_decompose(o, out);
        else if (pde_cmd->parsed()) rep = cmd_pde(o, out);
        else if (all_cmd->parsed()) rep = cmd_verify_all(o, out);
        else if (errata_cmd->parsed()) {
            rep.suite = "errata";
            for (const auto& e : errata::registry())
                out << e.id << " [" << errata::to_string(e.status) << "] " << e.subject << "\n  printed: "
                    << e.printed << "\n  applied: " << e.applied << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const pde::BudgetExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kBudgetRefused;
    }
    if (!roots_cmd->parsed() && !errata_cmd->parsed() && !all_cmd->parsed()) print_summary(rep, out);
    if (all_cmd->parsed())
        out << "verify-all: " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.checks_run << " checks, "
            << rep.failures.size() << " failures)\n";
    if (!o.json_path.empty()) {
        std::ofstream file(o.json_path);
        if (!file) {
            err << "error: cannot write " << o.json_path << "\n";
            return kCheckFailed;
        }
        file << report_json(rep).dump(2) << "\n";
    }
    return rep.passed() ? kPass : kCheckFailed;
}

}  // namespace e7::cli
