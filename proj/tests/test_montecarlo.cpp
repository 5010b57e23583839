#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathbound/montecarlo.hpp"
#include "pathbound/weibull.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace pathbound;

TEST_CASE("derived streams are reproducible and separated") {
    auto a = derive_stream(42, 0);
    auto b = derive_stream(42, 0);
    for (int i = 0; i < 100; ++i) CHECK(a() == b());

    auto c = derive_stream(42, 0);
    auto d = derive_stream(42, 1);
    CHECK(c() != d());

    auto e = derive_stream(43, 0);
    auto f = derive_stream(42, 0);
    CHECK(e() != f());
}

TEST_CASE("uniform draws stay strictly inside (0,1)") {
    auto rng = derive_stream(1, 0);
    for (int i = 0; i < 100000; ++i) {
        const double u = uniform_open01(rng);
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniformity: chi-square over 100 bins at alpha = 0.001") {
    auto rng = derive_stream(99, 0);
    const int bins = 100;
    const int n = 100000;
    std::vector<int> count(bins, 0);
    for (int i = 0; i < n; ++i)
        ++count[std::min(bins - 1, static_cast<int>(uniform_open01(rng) * bins))];
    double chi2 = 0.0;
    const double expected = static_cast<double>(n) / bins;
    for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
    // p-value via the regularized upper gamma: Q(k/2, chi2/2)
    const double p =
        upper_incomplete_gamma((bins - 1) / 2.0, chi2 / 2.0) / std::tgamma((bins - 1) / 2.0);
    CHECK(p > 0.001);
}

TEST_CASE("sampled cost vectors are positive and seed-deterministic") {
    const auto g = fixtures::fig1();
    auto rng1 = derive_stream(7, 3);
    auto rng2 = derive_stream(7, 3);
    const auto c1 = sample_costs(g, rng1);
    const auto c2 = sample_costs(g, rng2);
    CHECK(c1 == c2);
    for (double c : c1) CHECK(c > 0.0);
}

TEST_CASE("per-edge empirical means match eta * Gamma(1 + 1/gamma)") {
    const auto g = fixtures::fig1(2.0, 1.5);
    const std::size_t n = 1'000'000 / 7;
    std::vector<RunningStats> per_edge(g.edge_count());
    auto rng = derive_stream(12, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto costs = sample_costs(g, rng);
        for (std::size_t j = 0; j < costs.size(); ++j) per_edge[j].add(costs[j]);
    }
    for (std::size_t j = 0; j < per_edge.size(); ++j) {
        const double se = std::sqrt(per_edge[j].variance_unbiased() / static_cast<double>(n));
        CHECK(std::fabs(per_edge[j].mean - mean(g.edge_params()[j])) < 4.0 * se);
    }
}

TEST_CASE("single-edge exponential estimate is unbiased within 4 SE") {
    const auto g = fixtures::single_edge(1.0, 1.0);
    const auto r = estimate_expected_shortest(g, {100000, 5, 4096, 1});
    CHECK(std::fabs(r.mean - 1.0) < 4.0 * r.std_err);
    CHECK(r.samples == 100000);
    CHECK(r.ci95.first == doctest::Approx(r.mean - 1.96 * r.std_err));
    CHECK(r.ci95.second == doctest::Approx(r.mean + 1.96 * r.std_err));
}

TEST_CASE("two-route exponential graph matches the quadrature oracle") {
    // z = min(X13, X12 + X23), all Exp(1): E[z] = integral of (1+t) e^{-2t}
    const auto g = fixtures::two_route(1.0, 1.0);
    const double truth = oracles::integrate(
        [](double t) { return (1.0 + t) * std::exp(-2.0 * t); }, 0.0, 60.0, 1e-13);
    CHECK(truth == doctest::Approx(0.75).epsilon(1e-10)); // sanity: closed form
    const auto r = estimate_expected_shortest(g, {200000, 21, 4096, 1});
    CHECK(std::fabs(r.mean - truth) < 4.0 * r.std_err);
}

TEST_CASE("results are bit-identical across worker counts") {
    const auto g = fixtures::fig1();
    const auto r1 = estimate_expected_shortest(g, {20000, 9, 1024, 1});
    const auto r4 = estimate_expected_shortest(g, {20000, 9, 1024, 4});
    CHECK(r1.mean == r4.mean);
    CHECK(r1.std_err == r4.std_err);
    CHECK(r1.ci95 == r4.ci95);
}

TEST_CASE("fixed seed gives identical results across runs") {
    const auto g = fixtures::fig1();
    const auto a = estimate_expected_shortest(g, {5000, 33, 512, 2});
    const auto b = estimate_expected_shortest(g, {5000, 33, 512, 2});
    CHECK(a.mean == b.mean);
    CHECK(a.std_err == b.std_err);
}

TEST_CASE("95% CI covers the true mean in at least 90% of 200 runs") {
    const auto g = fixtures::single_edge(1.0, 1.0); // true mean 1
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto r = estimate_expected_shortest(g, {1000, seed, 256, 1});
        if (r.ci95.first <= 1.0 && 1.0 <= r.ci95.second) ++covered;
    }
    CHECK(covered >= 180);
}

TEST_CASE("doubling the sample count shrinks stderr by about 1/sqrt(2)") {
    const auto g = fixtures::fig1();
    const auto small = estimate_expected_shortest(g, {20000, 77, 4096, 1});
    const auto big = estimate_expected_shortest(g, {40000, 78, 4096, 1});
    const double ratio = big.std_err / small.std_err;
    CHECK(ratio > 0.7071 * 0.8);
    CHECK(ratio < 0.7071 * 1.2);
}

TEST_CASE("invalid graphs are rejected") {
    const DegradationGraph g(2, {{1, 2}}, {{0.0, 1.0}}); // eta = 0
    CHECK_THROWS_AS(static_cast<void>(estimate_expected_shortest(g, {100, 1, 64, 1})),
                    PreconditionError);
}

TEST_CASE("running stats merge behaves on empty and ordered inputs") {
    RunningStats a;
    RunningStats b;
    for (double x : {1.0, 2.0, 3.0}) b.add(x);
    a.merge(b);
    CHECK(a.count == 3);
    CHECK(a.mean == doctest::Approx(2.0));
    RunningStats empty;
    a.merge(empty);
    CHECK(a.count == 3);
}
