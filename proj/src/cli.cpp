#include "numrad/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "numrad/contraction_bounds.hpp"
#include "numrad/fuzz.hpp"
#include "numrad/graph_energy.hpp"
#include "numrad/linalg.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/radius.hpp"
#include "numrad/refined_bounds.hpp"
#include "numrad/schatten_bounds.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace numrad {

namespace {

// Input problems detected after flag parsing (bad list tokens, unknown
// ensemble names).  Mapped to exit code 2 like CLI11's own parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed8(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", v);
    return buf;
}

std::string sci4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.4e", v);
    return buf;
}

std::string gnum(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Comma-separated doubles; "inf" names the infinite Schatten exponent.
std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        const std::size_t first = token.find_first_not_of(" \t");
        const std::size_t last = token.find_last_not_of(" \t");
        token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
        if (token == "inf" || token == "Inf" || token == "INF") {
            vals.push_back(std::numeric_limits<double>::infinity());
        } else {
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (token.empty() || end != token.c_str() + token.size())
                throw UsageError(flag + ": cannot parse value '" + token + "'");
            vals.push_back(v);
        }
        pos = comma + 1;
    }
    return vals;
}

double parse_scalar(const std::string& text, const std::string& flag) {
    const std::vector<double> vals = parse_list(text, flag);
    if (vals.size() != 1) throw UsageError(flag + ": expected a single value");
    return vals.front();
}

std::string bound_line(const BoundResult& e, const std::string& label) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "  %-28s %-14s value %14.8f  slack %+.4e  %s\n",
                  e.name.c_str(), label.c_str(), e.value, e.slack,
                  e.satisfied ? "ok" : "VIOLATION");
    return buf;
}

std::string pair_line(const char* name, const std::string& label, const InequalityPair& iq) {
    char buf[224];
    std::snprintf(buf, sizeof buf, "  %-28s %-14s lhs %14.8f  rhs %14.8f  slack %+.4e  %s\n",
                  name, label.c_str(), iq.lhs, iq.rhs, iq.slack(),
                  iq.slack() >= -kSlackTol ? "ok" : "VIOLATION");
    return buf;
}

// Label from the stored parameters, preferring t over alpha; adds a
// degeneracy marker when the correction term was dropped.
std::string param_label(const BoundResult& e) {
    std::string label;
    if (const auto it = e.params.find("t"); it != e.params.end())
        label = "t=" + gnum(it->second);
    else if (const auto it2 = e.params.find("alpha"); it2 != e.params.end())
        label = "alpha=" + gnum(it2->second);
    if (const auto it = e.params.find("degenerate"); it != e.params.end() && it->second != 0.0)
        label += "*";
    return label;
}

void print_matrix(std::ostream& out, const std::string& name, const ComplexMatrix& m) {
    out << name << " =\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line = " ";
        for (std::size_t k = 0; k < m.cols(); ++k) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %.8f%+.8fi", m(i, k).real(), m(i, k).imag());
            line += buf;
        }
        out << line << "\n";
    }
}

nlohmann::ordered_json bound_json(const BoundResult& e) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["value"] = e.value;
    j["reference"] = e.reference;
    j["lower"] = e.lower;
    j["slack"] = e.slack;
    j["satisfied"] = e.satisfied;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : e.params) params[k] = v;
    j["params"] = std::move(params);
    return j;
}

int finish(std::ostream& out, bool ok) {
    out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_radius(const std::string& file, const std::string& p_str, double tol,
               std::ostream& out) {
    const ComplexMatrix t = load_matrix_file(file);
    const double nrm = operator_norm(t);
    if (!p_str.empty()) {
        const double p = parse_scalar(p_str, "--p");
        const double wp = p_numerical_radius(t, p, tol);
        out << "p = " << gnum(p) << "\n";
        out << "w_p = " << fixed8(wp) << "\n";
        out << "norm = " << fixed8(nrm) << "\n";
    } else {
        const RadiusResult r = numerical_radius(t, tol);
        out << "w = " << fixed8(r.value) << "\n";
        out << "norm = " << fixed8(nrm) << "\n";
        out << "theta = " << fixed8(r.theta_star) << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& file, const std::string& t_str, const std::string& a_str,
               bool as_json, std::ostream& out) {
    const ComplexMatrix t = load_matrix_file(file);
    std::vector<double> t_grid, alpha_grid;
    if (t_str.empty() && a_str.empty()) {
        for (int k = 0; k <= 10; ++k) t_grid.push_back(k / 10.0);
        alpha_grid = t_grid;
    } else {
        t_grid = t_str.empty() ? std::vector<double>{0.5} : parse_list(t_str, "--t");
        alpha_grid = a_str.empty() ? std::vector<double>{0.5} : parse_list(a_str, "--alpha");
    }

    const RadiusResult w = numerical_radius(t);
    const double nrm = operator_norm(t);

    // weighted_quadratic is the only alpha-dependent family, so the report
    // walks t for everything else and alpha for it alone
    std::vector<BoundResult> rows;
    for (double tp : t_grid) {
        const BoundReport rep = single_operator_bounds(t, tp, 0.5, w);
        for (const BoundResult& e : rep.entries)
            if (e.name != "weighted_quadratic") rows.push_back(e);
    }
    for (double al : alpha_grid) {
        const BoundReport rep = single_operator_bounds(t, 0.5, al, w);
        for (const BoundResult& e : rep.entries)
            if (e.name == "weighted_quadratic") rows.push_back(e);
    }

    bool ok = true;
    for (const BoundResult& e : rows) ok = ok && e.satisfied;

    if (as_json) {
        nlohmann::ordered_json j;
        j["w"] = w.value;
        j["norm"] = nrm;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const BoundResult& e : rows) arr.push_back(bound_json(e));
        j["bounds"] = std::move(arr);
        j["pass"] = ok;
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    out << "w = " << fixed8(w.value) << "\n";
    out << "norm = " << fixed8(nrm) << "\n";
    for (const BoundResult& e : rows) out << bound_line(e, param_label(e));
    return finish(out, ok);
}

int cmd_product(const std::string& a_file, const std::string& x_file, const std::string& b_file,
                std::ostream& out) {
    const ComplexMatrix a = load_matrix_file(a_file);
    const ComplexMatrix x = load_matrix_file(x_file);
    const ComplexMatrix b = load_matrix_file(b_file);
    const BoundReport rep = bound_product_axb(a, x, b);
    const BoundResult& unref = rep.at("product_unrefined");
    const BoundResult& refined = rep.at("product_refined");
    out << "w(A*XB) = " << fixed8(unref.reference) << "\n";
    out << bound_line(unref, "");
    out << bound_line(refined, param_label(refined));
    out << "correction = " << fixed8(refined.params.at("correction")) << "\n";
    out << "gain = " << fixed8(unref.value - refined.value) << "\n";
    return finish(out, rep.all_satisfied());
}

int cmd_contraction(const std::string& a_file, const std::string& b_file,
                    const std::string& m_file, double alpha, std::ostream& out) {
    const ComplexMatrix a = load_matrix_file(a_file);
    const ComplexMatrix b = load_matrix_file(b_file);
    const ComplexMatrix prod = a.adjoint() * b;
    const RadiusResult radius = numerical_radius(prod);
    const BoundReport rep = bound_adjoint_product(a, b, radius);
    const ContractionFactorization fact =
        contraction_factor(b.adjoint() * b, a.adjoint() * a, prod);

    out << "w(A*B) = " << fixed8(radius.value) << "\n";
    out << bound_line(rep.at("adjoint_product_middle"), "");
    out << bound_line(rep.at("adjoint_product_right"), "");
    print_matrix(out, "K", fact.factor);
    out << "norm(K) = " << fixed8(fact.norm_factor) << "\n";
    out << "residual = " << sci4(fact.residual) << "\n";
    bool ok = rep.all_satisfied() && fact.norm_factor <= 1.0 + kSlackTol;

    if (!m_file.empty()) {
        const ComplexMatrix t = load_matrix_file(m_file);
        const SingularValueDecomposition ft = svd(t);
        const ComplexMatrix f_two = modulus_power(ft, 2.0 * alpha);
        const ComplexMatrix g_two = comodulus_power(ft, 2.0 * (1.0 - alpha));
        const bool positive = block_positive(f_two, g_two, t);
        out << "block_positive(alpha=" << gnum(alpha) << ") = " << (positive ? "yes" : "no")
            << "\n";
        const BoundReport crep = contraction_radius_bound(t, alpha);
        out << bound_line(crep.at("radius_refined"), param_label(crep.at("radius_refined")));
        out << bound_line(crep.at("radius_intermediate"),
                          param_label(crep.at("radius_intermediate")));
        out << bound_line(crep.at("radius_coarse"), param_label(crep.at("radius_coarse")));
        ok = ok && positive && crep.all_satisfied();
    }
    return finish(out, ok);
}

int cmd_schatten(const std::string& file, const std::string& s_file, const std::string& p_str,
                 const std::string& t_str, std::ostream& out) {
    const ComplexMatrix t = load_matrix_file(file);
    const std::vector<double> p_grid =
        p_str.empty()
            ? std::vector<double>{0.5, 1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()}
            : parse_list(p_str, "--p");
    const std::vector<double> t_grid = t_str.empty()
                                           ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}
                                           : parse_list(t_str, "--t");

    const SingularValueDecomposition ft = svd(t);
    out << "schatten norms:\n";
    for (double p : p_grid) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  ||T||_%-6s = %14.8f\n", gnum(p).c_str(),
                      schatten_from_singulars(ft.singulars, p));
        out << buf;
    }

    bool ok = true;
    out << "p-radius bounds:\n";
    const std::vector<double> wps = p_numerical_radius_multi(t, p_grid);
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        const double p = p_grid[pi];
        out << "  w_" << gnum(p) << " = " << fixed8(wps[pi]) << "\n";
        for (double tp : t_grid) {
            const std::string label = "t=" + gnum(tp) + " p=" + gnum(p);
            const BoundResult sym =
                p_radius_power_bound(t, tp, p, PRadiusVariant::symmetric, wps[pi]);
            out << bound_line(sym, label);
            ok = ok && sym.satisfied;
            const BoundResult mix = p_radius_power_bound(t, tp, p, PRadiusVariant::mixed, wps[pi]);
            out << bound_line(mix, label);
            ok = ok && mix.satisfied;
        }
        const BoundResult half = p_radius_power_bound(t, 0.5, p, PRadiusVariant::half, wps[pi]);
        out << bound_line(half, "p=" + gnum(p));
        ok = ok && half.satisfied;
    }

    out << "interpolation:\n";
    for (double p : p_grid) {
        for (double tp : t_grid) {
            if (!(tp > 0.0 && tp < 1.0)) continue;
            const InequalityPair iq = schatten_interpolation(t, p, tp);
            out << pair_line("schatten_interpolation", "p=" + gnum(p) + " t=" + gnum(tp), iq);
            ok = ok && iq.slack() >= -kSlackTol;
        }
    }

    if (!s_file.empty()) {
        const ComplexMatrix s = load_matrix_file(s_file);
        out << "sum bounds:\n";
        for (std::size_t j = 1; j <= t.rows(); ++j) {
            const InequalityPair iq = singular_value_sum_bound(t, s, {0.5, 0.5}, j);
            out << pair_line("singular_value_sum", "j=" + std::to_string(j), iq);
            ok = ok && iq.slack() >= -kSlackTol;
        }
        for (double p : p_grid) {
            for (double tp : t_grid) {
                const std::string label = "p=" + gnum(p) + " t=" + gnum(tp);
                const InequalityPair matched = schatten_sum_bound(t, s, {1.0 - tp, 1.0 - tp}, p);
                out << pair_line("schatten_sum_matched", label, matched);
                ok = ok && matched.slack() >= -kSlackTol;
                const InequalityPair mixed = schatten_sum_bound(t, s, {1.0 - tp, tp}, p);
                out << pair_line("schatten_sum_mixed", label, mixed);
                ok = ok && mixed.slack() >= -kSlackTol;
            }
        }
        if (const auto iq = normal_sum_norm_bound(t, s)) {
            out << pair_line("normal_sum_norm", "", *iq);
            ok = ok && iq->slack() >= -kSlackTol;
        } else {
            out << "  normal_sum_norm skipped: inputs are not both normal\n";
        }
    }
    return finish(out, ok);
}

int cmd_graph(const std::string& file, bool as_json, std::ostream& out) {
    const Graph g = parse_edge_list(read_text_file(file));
    const EnergyReport er = energy_report(g);
    const bool ok = er.bounds.all_satisfied();

    if (as_json) {
        nlohmann::ordered_json j;
        j["n"] = er.n;
        j["m"] = er.m;
        j["energy"] = er.energy;
        j["spectral_norm"] = er.spectral_norm;
        j["rank"] = er.rank;
        j["max_degree_sum"] = er.max_degree_sum;
        j["eigenvalues"] = er.eigenvalues;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const BoundResult& e : er.bounds.entries) arr.push_back(bound_json(e));
        j["bounds"] = std::move(arr);
        j["pass"] = ok;
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    out << "n = " << er.n << "\n";
    out << "m = " << er.m << "\n";
    out << "energy = " << fixed8(er.energy) << "\n";
    out << "spectral_norm = " << fixed8(er.spectral_norm) << "\n";
    out << "rank = " << er.rank << "\n";
    out << "max_degree_sum = " << gnum(er.max_degree_sum) << "\n";
    for (const BoundResult& e : er.bounds.entries) out << bound_line(e, "");
    return finish(out, ok);
}

int cmd_verify(std::uint64_t seed, int trials, std::size_t dim, const std::string& ens_str,
               bool as_json, std::ostream& out) {
    FuzzConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.dim = dim;
    if (!ens_str.empty()) {
        const auto ens = parse_ensemble(ens_str);
        if (!ens)
            throw UsageError("unknown ensemble '" + ens_str +
                             "' (expected ginibre, hermitian, normal, nilpotent, contraction, "
                             "or psd)");
        cfg.ensemble = *ens;
    }
    const VerificationReport rep = fuzz_verify(cfg);
    out << (as_json ? format_report_json(rep) : format_report_table(rep));
    return rep.pass() ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical radius and Schatten norm inequality toolkit"};
    app.require_subcommand(1);

    std::string radius_file, radius_p;
    double radius_tol = 1e-10;
    CLI::App* rad = app.add_subcommand("radius", "numerical radius and operator norm");
    rad->add_option("--matrix", radius_file, "matrix JSON file")->required();
    rad->add_option("--p", radius_p, "Schatten exponent; reports the p-radius instead");
    rad->add_option("--tol", radius_tol, "angle refinement tolerance");

    std::string bounds_file, bounds_t, bounds_alpha;
    bool bounds_json = false;
    CLI::App* bnd = app.add_subcommand("bounds", "refined numerical radius bounds");
    bnd->add_option("--matrix", bounds_file, "matrix JSON file")->required();
    bnd->add_option("--t", bounds_t, "comma-separated power parameters in [0,1]");
    bnd->add_option("--alpha", bounds_alpha, "comma-separated weights in [0,1]");
    bnd->add_flag("--json", bounds_json, "machine-readable output");

    std::string prod_a, prod_x, prod_b;
    CLI::App* prd = app.add_subcommand("product", "refined bound for w(A*XB)");
    prd->add_option("--a", prod_a, "left factor JSON file")->required();
    prd->add_option("--x", prod_x, "positive middle factor JSON file")->required();
    prd->add_option("--b", prod_b, "right factor JSON file")->required();

    std::string con_a, con_b, con_m;
    double con_alpha = 0.5;
    CLI::App* con = app.add_subcommand("contraction", "contraction-based bounds for w(A*B)");
    con->add_option("--a", con_a, "left operator JSON file")->required();
    con->add_option("--b", con_b, "right operator JSON file")->required();
    CLI::Option* con_m_opt =
        con->add_option("--matrix", con_m, "also bound w of this matrix via its canonical block");
    con->add_option("--alpha", con_alpha, "power split for the canonical block")
        ->needs(con_m_opt);

    std::string sch_file, sch_s, sch_p, sch_t;
    CLI::App* sch = app.add_subcommand("schatten", "Schatten norms and p-radius bounds");
    sch->add_option("--matrix", sch_file, "matrix JSON file")->required();
    sch->add_option("--s", sch_s, "second matrix for sum bounds");
    sch->add_option("--p", sch_p, "comma-separated exponents (inf allowed)");
    sch->add_option("--t", sch_t, "comma-separated power parameters in [0,1]");

    std::string graph_file;
    bool graph_json = false;
    CLI::App* grf = app.add_subcommand("graph", "adjacency energy bounds");
    grf->add_option("--edges", graph_file, "edge list file")->required();
    grf->add_flag("--json", graph_json, "machine-readable output");

    std::uint64_t ver_seed = 0;
    int ver_trials = 0;
    std::size_t ver_dim = 4;
    std::string ver_ensemble;
    bool ver_json = false;
    CLI::App* ver = app.add_subcommand("verify", "randomized check of every inequality");
    ver->add_option("--seed", ver_seed, "stream seed")->required();
    ver->add_option("--trials", ver_trials, "number of trials")->required();
    ver->add_option("--dim", ver_dim, "matrix dimension, 2..12")->required();
    ver->add_option("--ensemble", ver_ensemble,
                    "ginibre|hermitian|normal|nilpotent|contraction|psd");
    ver->add_flag("--json", ver_json, "machine-readable output");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("numrad");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (rad->parsed()) return cmd_radius(radius_file, radius_p, radius_tol, out);
        if (bnd->parsed()) return cmd_bounds(bounds_file, bounds_t, bounds_alpha, bounds_json, out);
        if (prd->parsed()) return cmd_product(prod_a, prod_x, prod_b, out);
        if (con->parsed()) return cmd_contraction(con_a, con_b, con_m, con_alpha, out);
        if (sch->parsed()) return cmd_schatten(sch_file, sch_s, sch_p, sch_t, out);
        if (grf->parsed()) return cmd_graph(graph_file, graph_json, out);
        if (ver->parsed())
            return cmd_verify(ver_seed, ver_trials, ver_dim, ver_ensemble, ver_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace numrad
