#include "numrad/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "numrad/contraction_bounds.hpp"
#include "numrad/graph_energy.hpp"
#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"
#include "numrad/refined_bounds.hpp"
#include "numrad/schatten_bounds.hpp"

#include "json.hpp"

namespace numrad {

namespace {

// Report order.  Every name a trial can record must be listed here; pushing
// an unknown name is a programming error and throws.
const char* const kRegistry[] = {
    "radius_sandwich_lower",
    "radius_sandwich_upper",
    "kato_pointwise_refined",
    "kato_refined_vs_classical",
    "kato_equality_psd",
    "half_power_sum",
    "half_power_sum_refined",
    "half_power_sum_gain",
    "kittaneh",
    "kittaneh_refined",
    "kittaneh_gain",
    "operator_norm",
    "operator_norm_refined",
    "operator_norm_gain",
    "split_power_sum",
    "split_power_sum_refined",
    "split_power_sum_gain",
    "symmetric_power_sum",
    "symmetric_power_sum_refined",
    "symmetric_power_sum_gain",
    "weighted_quadratic",
    "buzano_pointwise_refined",
    "buzano_refined_vs_classical",
    "buzano_scalar",
    "polar_product_split",
    "polar_product_symmetric",
    "product_refined",
    "product_unrefined",
    "product_gain",
    "pair_refined",
    "pair_unrefined",
    "pair_gain",
    "block_positive_canonical",
    "block_factor_norm",
    "block_factor_residual",
    "block_cauchy_schwarz",
    "contraction_modulus_order",
    "contraction_pointwise_refined",
    "contraction_pointwise_classical",
    "contraction_radius_refined",
    "contraction_radius_intermediate",
    "contraction_radius_coarse",
    "contraction_chain_lower",
    "contraction_chain_upper",
    "adjoint_product_middle",
    "adjoint_product_right",
    "adjoint_product_chain",
    "singular_value_sum",
    "schatten_sum_matched",
    "schatten_sum_mixed",
    "schatten_sum_half",
    "normal_sum_norm",
    "p_radius_symmetric",
    "p_radius_mixed",
    "p_radius_half",
    "p_radius_square_infinity",
    "schatten_interpolation",
    "schatten_monotonicity",
    "power_mean_interpolation",
    "energy_degree_sum",
    "energy_edge_count",
    "energy_mcclelland",
    "energy_rank",
    "spectral_degree_sum",
    "graph_trace_identity",
    "graph_norm_energy",
    "graph_dominance_equivalence",
};

int registry_index(const char* name) {
    static const std::unordered_map<std::string, int> lookup = [] {
        std::unordered_map<std::string, int> m;
        const auto& names = inequality_registry();
        for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], static_cast<int>(i));
        return m;
    }();
    const auto it = lookup.find(name);
    if (it == lookup.end())
        throw std::logic_error(std::string("inequality name not registered: ") + name);
    return it->second;
}

struct Record {
    int name;
    double slack;
};

void validate(const FuzzConfig& cfg) {
    if (cfg.trials < 0) throw std::domain_error("trial count must be nonnegative");
    if (cfg.dim < 2 || cfg.dim > 12) throw std::domain_error("dimension must lie in [2,12]");
    for (double v : cfg.t_grid)
        if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("t grid values must lie in [0,1]");
    for (double v : cfg.alpha_grid)
        if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("alpha grid values must lie in [0,1]");
    for (double v : cfg.p_grid)
        if (!(v > 0.0)) throw std::domain_error("p grid values must be positive");
}

// One trial: draws a fixed sequence of inputs from its own substream, then
// records the slack of every registered inequality on them.
std::vector<Record> run_trial(const FuzzConfig& cfg, int trial) {
    std::vector<Record> log;
    log.reserve(2048);
    auto push = [&log](const char* name, double slack) {
        log.push_back({registry_index(name), slack});
    };

    Rng rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    const std::size_t n = cfg.dim;

    // draw order is part of the reproducibility contract; keep it stable
    const ComplexMatrix t = random_matrix(rng, n, cfg.ensemble);
    const cvec x = random_unit_vector(rng, n);
    const cvec y = random_unit_vector(rng, n);
    const ComplexMatrix a = random_matrix(rng, n, Ensemble::ginibre);
    const ComplexMatrix b = random_matrix(rng, n, Ensemble::ginibre);
    const ComplexMatrix xp = random_matrix(rng, n, Ensemble::psd);
    const ComplexMatrix s2 = random_matrix(rng, n, cfg.ensemble);
    const ComplexMatrix n1 = random_matrix(rng, n, Ensemble::normal);
    const ComplexMatrix n2 = random_matrix(rng, n, Ensemble::normal);
    const std::size_t graph_n = 3 + static_cast<std::size_t>(trial % 10);
    const double graph_q = trial % 3 == 0 ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
    const Graph graph = random_graph(graph_n, graph_q, [&rng] { return rng.uniform(); });

    if (max_abs_entry(t) == 0.0) return log; // a zero draw has nothing to bound

    const SingularValueDecomposition ft = svd(t);
    const double nrm = ft.singulars.front();
    const RadiusResult radius = numerical_radius(t);

    push("radius_sandwich_lower", radius.value - 0.5 * nrm);
    push("radius_sandwich_upper", nrm - radius.value);

    for (double tp : cfg.t_grid) {
        const PointwiseCheck kato = kato_pointwise_refined(t, x, y, tp);
        push("kato_pointwise_refined", kato.rhs_refined - kato.lhs);
        push("kato_refined_vs_classical", kato.rhs_classical - kato.rhs_refined);
    }
    {
        // sharpness probe: PSD operator with x = y = top eigenvector attains
        // equality, so tightest_slack for this name should sit near zero
        const HermitianEigen eig = hermitian_eig(xp);
        cvec top(n);
        for (std::size_t i = 0; i < n; ++i) top[i] = eig.eigenvectors(i, n - 1);
        for (double tp : cfg.t_grid) {
            const PointwiseCheck kato = kato_pointwise_refined(xp, top, top, tp);
            push("kato_equality_psd", kato.rhs_refined - kato.lhs);
        }
    }

    for (double tp : cfg.t_grid) {
        for (double al : cfg.alpha_grid) {
            const BoundReport rep = single_operator_bounds(t, tp, al, radius);
            for (const BoundResult& e : rep.entries) push(e.name.c_str(), e.slack);
            const char* const families[] = {"half_power_sum", "kittaneh", "operator_norm",
                                            "split_power_sum", "symmetric_power_sum"};
            for (const char* fam : families) {
                const std::string refined = std::string(fam) + "_refined";
                const std::string gain = std::string(fam) + "_gain";
                push(gain.c_str(), rep.at(fam).value - rep.at(refined).value);
            }
        }
    }

    {
        const PointwiseCheck bz = buzano_product_pointwise(a, xp, b, x, y);
        push("buzano_pointwise_refined", bz.rhs_refined - bz.lhs);
        push("buzano_refined_vs_classical", bz.rhs_classical - bz.rhs_refined);
        // the PSD middle factor alone: |<Xx,y>| <= (||X||/2)(|<x,y>| + 1)
        const double lhs = std::abs(inner(xp * x, y));
        const double rhs = 0.5 * operator_norm(xp) * (std::abs(inner(x, y)) + 1.0);
        push("buzano_scalar", rhs - lhs);
    }
    for (double tp : cfg.t_grid) {
        const PointwiseCheck sp = buzano_polar_pointwise(t, tp, PolarProductMode::split, x, y);
        push("polar_product_split", sp.rhs_refined - sp.lhs);
        const PointwiseCheck sy = buzano_polar_pointwise(t, tp, PolarProductMode::symmetric, x, y);
        push("polar_product_symmetric", sy.rhs_refined - sy.lhs);
    }

    {
        const BoundReport rep = bound_product_axb(a, xp, b);
        push("product_refined", rep.at("product_refined").slack);
        push("product_unrefined", rep.at("product_unrefined").slack);
        push("product_gain",
             rep.at("product_unrefined").value - rep.at("product_refined").value);
    }
    if (max_abs_entry(s2) != 0.0) {
        const BoundReport rep = bound_product_st(s2, t);
        push("pair_refined", rep.at("pair_refined").slack);
        push("pair_unrefined", rep.at("pair_unrefined").slack);
        push("pair_gain", rep.at("pair_unrefined").value - rep.at("pair_refined").value);
    }

    for (double al : cfg.alpha_grid) {
        const ComplexMatrix f2 = modulus_power(ft, 2.0 * al);
        const ComplexMatrix g2 = comodulus_power(ft, 2.0 * (1.0 - al));
        push("block_positive_canonical", block_positive(f2, g2, t) ? 1.0 : -1.0);

        const ContractionFactorization fact = contraction_factor(f2, g2, t);
        push("block_factor_norm", 1.0 - fact.norm_factor);
        push("block_factor_residual",
             1e-7 * std::max(1.0, frobenius_norm(t)) - fact.residual);

        const double qa = std::max(std::real(inner(f2 * x, x)), 0.0);
        const double qb = std::max(std::real(inner(g2 * y, y)), 0.0);
        push("block_cauchy_schwarz", std::sqrt(qa * qb) - std::abs(inner(t * x, y)));

        const SingularValueDecomposition fk = svd(fact.factor);
        push("contraction_modulus_order",
             min_eigenvalue(modulus_power(fk, 0.5) - modulus_power(fk, 1.0)));

        const PointwiseCheck pw = contraction_pointwise_bound(t, al, x, y);
        push("contraction_pointwise_refined", pw.rhs_refined - pw.lhs);
        push("contraction_pointwise_classical", pw.rhs_classical - pw.rhs_refined);

        const BoundReport rep = contraction_radius_bound(t, al, radius);
        push("contraction_radius_refined", rep.at("radius_refined").slack);
        push("contraction_radius_intermediate", rep.at("radius_intermediate").slack);
        push("contraction_radius_coarse", rep.at("radius_coarse").slack);
        push("contraction_chain_lower",
             rep.at("radius_intermediate").value - rep.at("radius_refined").value);
        push("contraction_chain_upper",
             rep.at("radius_coarse").value - rep.at("radius_intermediate").value);
    }
    {
        const BoundReport rep = bound_adjoint_product(a, b);
        push("adjoint_product_middle", rep.at("adjoint_product_middle").slack);
        push("adjoint_product_right", rep.at("adjoint_product_right").slack);
        push("adjoint_product_chain", rep.at("adjoint_product_right").value -
                                          rep.at("adjoint_product_middle").value);
    }

    for (double al : cfg.alpha_grid) {
        for (double be : {al, 1.0 - al}) {
            const PowerExponents pe{al, be};
            for (std::size_t j = 1; j <= n; ++j)
                push("singular_value_sum", singular_value_sum_bound(t, s2, pe, j).slack());
        }
    }
    for (double tp : cfg.t_grid) {
        for (double p : cfg.p_grid) {
            push("schatten_sum_matched",
                 schatten_sum_bound(t, s2, {1.0 - tp, 1.0 - tp}, p).slack());
            push("schatten_sum_mixed", schatten_sum_bound(t, s2, {1.0 - tp, tp}, p).slack());
        }
    }
    for (double p : cfg.p_grid)
        push("schatten_sum_half", schatten_sum_bound(t, s2, {0.5, 0.5}, p).slack());
    if (const auto iq = normal_sum_norm_bound(n1, n2)) push("normal_sum_norm", iq->slack());

    {
        const std::vector<double> wp = p_numerical_radius_multi(t, cfg.p_grid);
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            const double p = cfg.p_grid[pi];
            for (double tp : cfg.t_grid) {
                push("p_radius_symmetric",
                     p_radius_power_bound(t, tp, p, PRadiusVariant::symmetric, wp[pi]).slack);
                push("p_radius_mixed",
                     p_radius_power_bound(t, tp, p, PRadiusVariant::mixed, wp[pi]).slack);
            }
            push("p_radius_half",
                 p_radius_power_bound(t, 0.5, p, PRadiusVariant::half, wp[pi]).slack);
        }
        const double inf = std::numeric_limits<double>::infinity();
        for (double tp : cfg.t_grid) {
            const BoundResult sym =
                p_radius_power_bound(t, tp, inf, PRadiusVariant::symmetric, radius.value);
            push("p_radius_square_infinity",
                 sym.value * sym.value - radius.value * radius.value);
        }
    }

    for (double p : cfg.p_grid)
        for (double tp : cfg.t_grid)
            if (tp > 0.0 && tp < 1.0)
                push("schatten_interpolation", schatten_interpolation(t, p, tp).slack());
    {
        std::vector<double> ps;
        for (double p : cfg.p_grid)
            if (p >= 1.0) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            push("schatten_monotonicity",
                 schatten_from_singulars(ft.singulars, ps[i]) -
                     schatten_from_singulars(ft.singulars, ps[i + 1]));
    }
    {
        const double big =
            0.5 * operator_norm(modulus_power(ft, 2.0) + comodulus_power(ft, 2.0));
        for (double tp : cfg.t_grid) {
            const double m1 = operator_norm(modulus_power(ft, 2.0 * (1.0 - tp)) +
                                            comodulus_power(ft, 2.0 * (1.0 - tp)));
            const double m2 = operator_norm(modulus_power(ft, 2.0 * tp) +
                                            comodulus_power(ft, 2.0 * tp));
            push("power_mean_interpolation", big - 0.25 * m1 * m2);
        }
    }

    {
        const EnergyReport er = energy_report(graph);
        for (const BoundResult& e : er.bounds.entries) push(e.name.c_str(), e.slack);
        double sumsq = 0.0;
        for (double lam : er.eigenvalues) sumsq += lam * lam;
        const double m = static_cast<double>(er.m);
        push("graph_trace_identity", -std::abs(sumsq - 2.0 * m));
        push("graph_norm_energy", er.spectral_norm * er.energy - 2.0 * m);
        const double newb = er.bounds.at("energy_degree_sum").value;
        const double classic = er.bounds.at("energy_edge_count").value;
        const bool dominates = newb > classic + 1e-9;
        const bool predicted = m > er.max_degree_sum;
        push("graph_dominance_equivalence", dominates == predicted ? 1.0 : -1.0);
    }

    return log;
}

VerificationReport aggregate(const FuzzConfig& cfg,
                             const std::vector<std::vector<Record>>& per_trial) {
    const auto& names = inequality_registry();
    VerificationReport rep;
    rep.config = cfg;
    rep.stats.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) rep.stats[i].name = names[i];
    for (const auto& records : per_trial) {
        for (const Record& r : records) {
            InequalityStats& st = rep.stats[static_cast<std::size_t>(r.name)];
            ++st.trials;
            if (r.slack < kViolationTol) ++st.violations;
            st.worst_slack = std::min(st.worst_slack, r.slack);
            st.tightest_slack = std::min(st.tightest_slack, std::abs(r.slack));
        }
    }
    return rep;
}

} // namespace

const std::vector<std::string>& inequality_registry() {
    static const std::vector<std::string> names(std::begin(kRegistry), std::end(kRegistry));
    return names;
}

bool VerificationReport::pass() const {
    for (const InequalityStats& st : stats)
        if (st.violations != 0) return false;
    return true;
}

const InequalityStats* VerificationReport::find(const std::string& name) const {
    for (const InequalityStats& st : stats)
        if (st.name == name) return &st;
    return nullptr;
}

VerificationReport fuzz_verify(const FuzzConfig& config) {
    validate(config);
    std::vector<std::vector<Record>> per_trial(static_cast<std::size_t>(config.trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 0; k < config.trials; ++k)
        per_trial[static_cast<std::size_t>(k)] = run_trial(config, k);
    return aggregate(config, per_trial);
}

VerificationReport fuzz_verify_serial(const FuzzConfig& config) {
    validate(config);
    std::vector<std::vector<Record>> per_trial(static_cast<std::size_t>(config.trials));
    for (int k = 0; k < config.trials; ++k)
        per_trial[static_cast<std::size_t>(k)] = run_trial(config, k);
    return aggregate(config, per_trial);
}

std::string format_report_table(const VerificationReport& report) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-34s %10s %11s %14s %14s\n", "inequality", "checks",
                  "violations", "worst_slack", "tightest");
    out += line;
    long total_checks = 0, total_violations = 0;
    for (const InequalityStats& st : report.stats) {
        total_checks += st.trials;
        total_violations += st.violations;
        if (st.trials == 0) {
            std::snprintf(line, sizeof line, "%-34s %10ld %11ld %14s %14s\n", st.name.c_str(),
                          st.trials, st.violations, "-", "-");
        } else {
            std::snprintf(line, sizeof line, "%-34s %10ld %11ld %14.6e %14.6e\n",
                          st.name.c_str(), st.trials, st.violations, st.worst_slack,
                          st.tightest_slack);
        }
        out += line;
    }
    std::snprintf(line, sizeof line, "overall: %s (%ld violations in %ld checks)\n",
                  report.pass() ? "PASS" : "FAIL", total_violations, total_checks);
    out += line;
    return out;
}

std::string format_report_json(const VerificationReport& report) {
    nlohmann::ordered_json root;
    for (const InequalityStats& st : report.stats) {
        nlohmann::ordered_json entry;
        entry["trials"] = st.trials;
        entry["violations"] = st.violations;
        if (st.trials == 0)
            entry["worst_slack"] = nullptr;
        else
            entry["worst_slack"] = st.worst_slack;
        root[st.name] = std::move(entry);
    }
    return root.dump(2) + "\n";
}

} // namespace numrad
