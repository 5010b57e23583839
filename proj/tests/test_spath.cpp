#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathbound/spath.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace pathbound;

TEST_CASE("unit costs: length 2 with the smallest-edge-index tie break") {
    const auto g = fixtures::fig1();
    const std::vector<double> costs(7, 1.0);
    const auto r = dag_shortest_path(g, costs);
    CHECK(r.length == 2.0);
    // 1-3-5 (edges 1,5) ties 1-4-5 (edges 2,6); the smaller indices win
    CHECK(r.path.node_sequence == std::vector<int>{1, 3, 5});
    CHECK(r.path.edge_indices == std::vector<int>{1, 5});
}

TEST_CASE("single edge returns its cost and path") {
    const auto g = fixtures::single_edge();
    const auto r = dag_shortest_path(g, std::vector<double>{2.25});
    CHECK(r.length == 2.25);
    CHECK(r.path.node_sequence == std::vector<int>{1, 2});
}

TEST_CASE("length matches the brute-force oracle on random DAGs") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracles::random_dag(rng, 3 + static_cast<int>(rng() % 6),
                                           static_cast<int>(rng() % 8));
        std::vector<double> costs(g.edge_count());
        for (double& c : costs) c = u(rng);
        CHECK(dag_shortest_path(g, costs).length ==
              doctest::Approx(oracles::brute_shortest(g, costs)).epsilon(1e-12));
    }
}

TEST_CASE("length is invariant under permuting the edge input order") {
    const auto g = fixtures::fig1();
    std::vector<double> costs{0.3, 1.1, 0.9, 0.4, 0.6, 2.0, 0.5};
    const double base = dag_shortest_path(g, costs).length;

    std::vector<std::size_t> perm{3, 0, 6, 2, 5, 1, 4};
    std::vector<Edge> edges;
    std::vector<WeibullParams> params;
    std::vector<double> permuted;
    for (std::size_t k : perm) {
        edges.push_back(g.edges()[k]);
        params.push_back(g.edge_params()[k]);
        permuted.push_back(costs[k]);
    }
    const DegradationGraph shuffled(5, edges, params);
    CHECK(dag_shortest_path(shuffled, permuted).length == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("length is monotone in every single edge cost") {
    const auto g = fixtures::fig1();
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    std::vector<double> costs(7);
    for (double& c : costs) c = u(rng);
    const double base = dag_shortest_path(g, costs).length;
    for (std::size_t j = 0; j < costs.size(); ++j) {
        auto bumped = costs;
        bumped[j] += 0.7;
        CHECK(dag_shortest_path(g, bumped).length >= base);
    }
}

TEST_CASE("exact overload works with rational costs") {
    const auto g = fixtures::fig1();
    RationalVector costs(7);
    for (std::size_t j = 0; j < 7; ++j) costs[j] = rational(static_cast<int>(j) + 1, 3);
    const auto r = dag_shortest_path(g, costs);
    // cheapest of the five paths is 1-3-5: 2/3 + 6/3
    CHECK(r.length == rational(8, 3));
    CHECK(r.path.node_sequence == std::vector<int>{1, 3, 5});
}

TEST_CASE("negative or non-finite costs are rejected") {
    const auto g = fixtures::single_edge();
    CHECK_THROWS_AS(static_cast<void>(dag_shortest_path(g, std::vector<double>{-1.0})),
                    PreconditionError);
    CHECK_THROWS_AS(
        static_cast<void>(dag_shortest_path(
            g, std::vector<double>{std::numeric_limits<double>::infinity()})),
        PreconditionError);
}

TEST_CASE("unreachable sink raises an infeasibility error") {
    const DegradationGraph g(3, {{1, 2}}, {{1.0, 1.0}});
    CHECK_THROWS_AS(static_cast<void>(dag_shortest_path(g, std::vector<double>{1.0})),
                    InfeasibleError);
}

TEST_CASE("LP equivalence holds exactly on 100 random DAGs") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracles::random_dag(rng, 3 + static_cast<int>(rng() % 6),
                                           static_cast<int>(rng() % 10));
        RationalVector costs(g.edge_count());
        for (std::size_t j = 0; j < costs.size(); ++j)
            costs[j] = oracles::random_positive_rational(rng);
        const auto diag = verify_lp_equivalence(g, costs);
        CHECK(diag.values_equal);
        CHECK(diag.extended_component_zero);
        CHECK(diag.pass());
    }
}

TEST_CASE("LP equivalence on the example graph with unit costs") {
    RationalVector costs(7);
    for (std::size_t j = 0; j < 7; ++j) costs[j] = 1;
    const auto diag = verify_lp_equivalence(fixtures::fig1(), costs);
    CHECK(diag.pass());
    CHECK(diag.lp_value == 2);
    CHECK(diag.dp_value == 2);
}

TEST_CASE("LP equivalence on the single-edge graph") {
    RationalVector costs(1);
    costs[0] = rational(5, 7);
    const auto diag = verify_lp_equivalence(fixtures::single_edge(), costs);
    CHECK(diag.pass());
    CHECK(diag.lp_value == rational(5, 7));
}

TEST_CASE("every feasible basic solution keeps the extended component at zero") {
    // feasibility alone forces x_{m+1} = 0: check across feasible bases
    const auto lp = lp_from_graph(fixtures::fig1());
    for (const auto& basis : enumerate_bases(lp, true)) {
        const auto x = basis.full_solution(lp.n_cols());
        CHECK(x[lp.n_cols() - 1] == 0);
    }
}
