#include "pathbound/spath.hpp"

#include <cmath>

namespace pathbound {

LinearProgram lp_from_graph(const DegradationGraph& g) {
    const GraphDiagnostics d = validate(g);
    if (!d.pass()) {
        std::string msg = "graph failed validation:";
        for (const auto& issue : d.issues) msg += " " + issue + ";";
        throw PreconditionError(msg);
    }
    std::vector<ColumnCost> costs;
    costs.reserve(g.edge_count() + 1);
    for (const WeibullParams& p : g.edge_params()) costs.push_back(ColumnCost::random(p));
    costs.push_back(ColumnCost::fixed(0.0)); // extended column
    return LinearProgram(extend_incidence(build_incidence(g)), demand_vector(g.node_count()),
                         std::move(costs));
}

ShortestPathResult dag_shortest_path(const DegradationGraph& g, std::span<const double> costs) {
    for (double c : costs)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw PreconditionError("edge costs must be finite and nonnegative");
    const std::vector<int> order = topological_order(g);
    if (order.empty()) throw PreconditionError("shortest path requires an acyclic graph");
    return detail::dag_shortest_path_impl<double>(g, costs, order);
}

ExactShortestPathResult dag_shortest_path(const DegradationGraph& g,
                                          const RationalVector& costs) {
    for (std::size_t j = 0; j < costs.size(); ++j)
        if (costs[j] < 0) throw PreconditionError("edge costs must be nonnegative");
    const std::vector<int> order = topological_order(g);
    if (order.empty()) throw PreconditionError("shortest path requires an acyclic graph");
    return detail::dag_shortest_path_impl<Rational>(g, costs.entries(), order);
}

EquivalenceDiagnostics verify_lp_equivalence(const DegradationGraph& g,
                                             const RationalVector& edge_costs) {
    if (edge_costs.size() != g.edge_count())
        throw StructuralError("edge cost vector length mismatch");

    EquivalenceDiagnostics diag;
    const LinearProgram lp = lp_from_graph(g);

    RationalVector lp_costs(lp.n_cols());
    for (std::size_t j = 0; j < edge_costs.size(); ++j) lp_costs[j] = edge_costs[j];
    lp_costs[lp.n_cols() - 1] = 0; // extended column

    const DeterministicSolution sol = solve_deterministic(lp, lp_costs);
    const ExactShortestPathResult dp = dag_shortest_path(g, edge_costs);

    diag.lp_value = sol.value;
    diag.dp_value = dp.length;
    diag.values_equal = sol.value == dp.length;
    diag.extended_component_zero = sol.x[lp.n_cols() - 1] == 0;
    if (!diag.values_equal)
        diag.detail = "LP value " + to_string(sol.value) + " != DP value " + to_string(dp.length);
    else if (!diag.extended_component_zero)
        diag.detail = "extended component is nonzero: " + to_string(sol.x[lp.n_cols() - 1]);
    return diag;
}

} // namespace pathbound
