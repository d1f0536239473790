#include "numrad/graph_energy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "numrad/linalg.hpp"

namespace numrad {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "edge list line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
}

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    Graph g;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream fields(line);
        if (!have_n) {
            long long n = 0;
            std::string extra;
            if (!(fields >> n) || n < 1) parse_fail(line_no, "expected a positive vertex count");
            if (fields >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
            g.n = static_cast<std::size_t>(n);
            have_n = true;
            continue;
        }
        long long u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v)) parse_fail(line_no, "expected two vertex labels");
        if (fields >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
        if (u < 1 || v < 1 || u > static_cast<long long>(g.n) || v > static_cast<long long>(g.n))
            parse_fail(line_no, "vertex label out of range");
        if (u == v) parse_fail(line_no, "self-loop");
        const std::pair<std::size_t, std::size_t> e{static_cast<std::size_t>(std::min(u, v)),
                                                    static_cast<std::size_t>(std::max(u, v))};
        if (!seen.insert(e).second) parse_fail(line_no, "duplicate edge");
        g.edges.emplace_back(e.first, e.second);
    }
    if (!have_n) throw std::runtime_error("edge list is empty: vertex count line missing");
    return g;
}

ComplexMatrix adjacency(const Graph& g) {
    ComplexMatrix a(g.n, g.n);
    for (const auto& [u, v] : g.edges) {
        a(u - 1, v - 1) = 1.0;
        a(v - 1, u - 1) = 1.0;
    }
    return a;
}

EnergyReport energy_report(const Graph& g) {
    EnergyReport rep;
    rep.n = g.n;
    rep.m = g.edge_count();

    const ComplexMatrix adj = adjacency(g);
    std::vector<double> evals = hermitian_eigenvalues(adj);
    std::reverse(evals.begin(), evals.end());
    rep.eigenvalues = std::move(evals);

    double energy = 0.0, top = 0.0;
    for (double lam : rep.eigenvalues) {
        energy += std::abs(lam);
        top = std::max(top, std::abs(lam));
    }
    rep.energy = energy;
    rep.spectral_norm = top;
    for (double lam : rep.eigenvalues)
        if (std::abs(lam) > 1e-9 * top) ++rep.rank;

    std::vector<std::size_t> degree(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        ++degree[u - 1];
        ++degree[v - 1];
    }
    // each edge contributes the opposite endpoint's degree to a vertex's
    // neighbour-degree sum; the bound wants the max of those sums
    double max_ds = 0.0;
    std::vector<double> degree_sum(g.n, 0.0);
    for (const auto& [u, v] : g.edges) {
        degree_sum[u - 1] += static_cast<double>(degree[v - 1]);
        degree_sum[v - 1] += static_cast<double>(degree[u - 1]);
    }
    for (double ds : degree_sum) max_ds = std::max(max_ds, ds);
    rep.max_degree_sum = max_ds;

    const double m = static_cast<double>(rep.m);
    const double n = static_cast<double>(rep.n);
    const double new_lower = rep.m == 0 ? 0.0 : 2.0 * m / std::sqrt(max_ds);

    rep.bounds.entries.push_back(lower_bound("energy_degree_sum", new_lower, rep.energy));
    rep.bounds.entries.push_back(lower_bound("energy_edge_count", 2.0 * std::sqrt(m), rep.energy));
    rep.bounds.entries.push_back(upper_bound("energy_mcclelland", std::sqrt(2.0 * m * n), rep.energy));
    rep.bounds.entries.push_back(upper_bound(
        "energy_rank", std::sqrt(2.0 * m * static_cast<double>(rep.rank)), rep.energy));
    rep.bounds.entries.push_back(
        upper_bound("spectral_degree_sum", std::sqrt(max_ds), rep.spectral_norm));
    return rep;
}

} // namespace numrad
