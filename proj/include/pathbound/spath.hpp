// Bridge between degradation graphs and linear programs, plus the
// topological-order shortest-path dynamic program used as an independent
// referee for the LP machinery and as the Monte Carlo kernel.

#pragma once

#include "pathbound/graph.hpp"
#include "pathbound/lp.hpp"

#include <span>
#include <string>
#include <vector>

namespace pathbound {

// min c^t x, A x = b, x >= 0 with A the extended incidence matrix,
// b the demand vector, Weibull costs per edge and a fixed zero cost on the
// extended column.
LinearProgram lp_from_graph(const DegradationGraph& g);

template <typename Cost>
struct BasicShortestPath {
    Cost length{};
    PathVector path;
};

using ShortestPathResult = BasicShortestPath<double>;
using ExactShortestPathResult = BasicShortestPath<Rational>;

namespace detail {

// DP over a precomputed topological order. Ties go to the smallest
// predecessor edge index. Throws InfeasibleError when the sink is
// unreachable.
template <typename Cost>
BasicShortestPath<Cost> dag_shortest_path_impl(const DegradationGraph& g,
                                               std::span<const Cost> costs,
                                               std::span<const int> topo_order) {
    const int n = g.node_count();
    if (costs.size() != g.edge_count()) throw StructuralError("cost vector length mismatch");
    std::vector<bool> reached(n + 1, false);
    std::vector<Cost> dist(n + 1, Cost{});
    std::vector<int> pred_edge(n + 1, -1);
    reached[g.source()] = true;

    std::vector<std::vector<int>> out(n + 1);
    for (std::size_t j = 0; j < g.edge_count(); ++j)
        out[g.edges()[j].tail].push_back(static_cast<int>(j));

    for (int u : topo_order) {
        if (!reached[u]) continue;
        for (int j : out[u]) {
            const int v = g.edges()[j].head;
            const Cost cand = dist[u] + costs[j];
            if (!reached[v] || cand < dist[v] || (cand == dist[v] && j < pred_edge[v])) {
                reached[v] = true;
                dist[v] = cand;
                pred_edge[v] = j;
            }
        }
    }
    if (!reached[g.sink()]) throw InfeasibleError("sink is unreachable from node 1");

    BasicShortestPath<Cost> result;
    result.length = dist[g.sink()];
    for (int v = g.sink(); v != g.source();) {
        const int j = pred_edge[v];
        result.path.edge_indices.push_back(j);
        result.path.node_sequence.push_back(v);
        v = g.edges()[j].tail;
    }
    result.path.node_sequence.push_back(g.source());
    std::reverse(result.path.edge_indices.begin(), result.path.edge_indices.end());
    std::reverse(result.path.node_sequence.begin(), result.path.node_sequence.end());
    return result;
}

} // namespace detail

// Exact DP for per-edge costs; requires an acyclic graph and finite,
// nonnegative costs.
ShortestPathResult dag_shortest_path(const DegradationGraph& g, std::span<const double> costs);
ExactShortestPathResult dag_shortest_path(const DegradationGraph& g, const RationalVector& costs);

// Cross-check that the extended LP and the DP referee agree: equal optimal
// values (exact) and an exactly-zero extended component in the LP solution.
struct EquivalenceDiagnostics {
    Rational lp_value;
    Rational dp_value;
    bool values_equal = false;
    bool extended_component_zero = false;
    std::string detail;

    bool pass() const { return values_equal && extended_component_zero; }
};

EquivalenceDiagnostics verify_lp_equivalence(const DegradationGraph& g,
                                             const RationalVector& edge_costs);

} // namespace pathbound
