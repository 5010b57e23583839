#include "pathbound/montecarlo.hpp"

#include "pathbound/spath.hpp"

#include <cmath>

namespace pathbound {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

double uniform_open01(std::mt19937_64& rng) {
    // 53-bit mantissa, offset by half a step: never 0, never 1
    return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

std::vector<double> sample_costs(const DegradationGraph& g, std::mt19937_64& rng) {
    std::vector<double> costs(g.edge_count());
    for (std::size_t j = 0; j < costs.size(); ++j)
        costs[j] = sample(g.edge_params()[j], uniform_open01(rng));
    return costs;
}

void RunningStats::merge(const RunningStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(o.count);
    const double delta = o.mean - mean;
    const double total = na + nb;
    mean += delta * (nb / total);
    m2 += o.m2 + delta * delta * (na * nb / total);
    count += o.count;
}

double RunningStats::variance_unbiased() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

SimulationResult to_simulation_result(const RunningStats& stats, std::uint64_t seed) {
    SimulationResult r;
    r.mean = stats.mean;
    r.std_err = stats.count > 0
                    ? std::sqrt(stats.variance_unbiased() / static_cast<double>(stats.count))
                    : 0.0;
    r.ci95 = {r.mean - 1.96 * r.std_err, r.mean + 1.96 * r.std_err};
    r.samples = stats.count;
    r.seed = seed;
    return r;
}

SimulationResult estimate_expected_shortest(const DegradationGraph& g, const SimConfig& cfg) {
    const GraphDiagnostics d = validate(g);
    if (!d.pass()) throw PreconditionError("simulation requires a valid graph");
    const std::vector<int> order = topological_order(g);

    auto per_sample = [&g, &order](std::mt19937_64& rng) {
        std::vector<double> costs(g.edge_count());
        for (std::size_t j = 0; j < costs.size(); ++j)
            costs[j] = sample(g.edge_params()[j], uniform_open01(rng));
        return detail::dag_shortest_path_impl<double>(g, costs, order).length;
    };
    return to_simulation_result(
        chunked_accumulate(cfg.samples, cfg.seed, cfg.chunk_size, cfg.workers, per_sample),
        cfg.seed);
}

} // namespace pathbound
