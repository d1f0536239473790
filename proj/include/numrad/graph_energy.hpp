#pragma once

#include <string>
#include <utility>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/report.hpp"

namespace numrad {

// Simple undirected graph, 1-based vertex labels, edges stored with u < v.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t edge_count() const { return edges.size(); }
};

// Parses the edge-list format: '#' lines are comments, blank lines are
// skipped, the first significant line is the vertex count n, every following
// significant line is "u v" with 1-based labels.  Trailing tokens, labels out
// of [1,n], self-loops, and duplicate edges are rejected; errors carry the
// offending line number.  Throws std::runtime_error.
Graph parse_edge_list(const std::string& text);

// Symmetric 0/1 adjacency matrix with zero diagonal.
ComplexMatrix adjacency(const Graph& g);

// Spectrum-derived summary of a graph.  max_degree_sum is the largest, over
// vertices i, of the sum of degrees of the neighbours of i; it drives both
// the spectral-norm bound and the energy lower bound below.
struct EnergyReport {
    std::size_t n = 0;
    std::size_t m = 0;
    double energy = 0.0;
    double spectral_norm = 0.0;
    std::vector<double> eigenvalues; // descending
    std::size_t rank = 0;            // eigenvalues with |lam| > 1e-9 * max|lam|
    double max_degree_sum = 0.0;
    BoundReport bounds;
};

// Bounds in the report, with the energy (or the spectral norm) as reference:
//   energy_degree_sum   lower, 2m / sqrt(max_degree_sum)   (0 when m = 0)
//   energy_edge_count   lower, 2 sqrt(m)
//   energy_mcclelland   upper, sqrt(2mn)
//   energy_rank         upper, sqrt(2m * rank)
//   spectral_degree_sum upper on ||Adj||, sqrt(max_degree_sum)
EnergyReport energy_report(const Graph& g);

// Erdos-Renyi sample: every pair becomes an edge with probability q, decided
// by successive draws from `uniform` (a callable returning doubles in [0,1)).
// Pairs are visited in row-major order (1,2), (1,3), ..., so equal seeds give
// equal graphs no matter which generator object backs the callable.
template <typename Uniform>
Graph random_graph(std::size_t n, double q, Uniform&& uniform) {
    Graph g;
    g.n = n;
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (uniform() < q) g.edges.emplace_back(u, v);
    return g;
}

} // namespace numrad
