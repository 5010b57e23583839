// Seeded, chunked Monte Carlo engine.
//
// Reproducibility contract: all randomness flows from (seed, chunk index).
// A chunk's generator is an mt19937_64 seeded with
// splitmix64(splitmix64(seed) ^ splitmix64(index + 1)); the sample budget is
// split into fixed chunks and chunk summaries are merged in index order, so
// results are bit-identical for any worker count.

#pragma once

#include "pathbound/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <utility>
#include <vector>

namespace pathbound {

struct SimConfig {
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    std::size_t chunk_size = 4096;
    int workers = 1;
};

struct SimulationResult {
    double mean = 0.0;
    double std_err = 0.0;
    std::pair<double, double> ci95{0.0, 0.0}; // mean -/+ 1.96 * std_err
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Pure in (seed, index): same pair, same stream.
std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index);

// 53-bit uniform strictly inside (0,1), safe for -log(u).
double uniform_open01(std::mt19937_64& rng);

// Independent Weibull draws per edge, in edge order.
std::vector<double> sample_costs(const DegradationGraph& g, std::mt19937_64& rng);

// Sample mean / stderr / 95% CI of the shortest 1->n path length.
SimulationResult estimate_expected_shortest(const DegradationGraph& g, const SimConfig& cfg);

// One-pass chunk summary mergeable in index order (Chan's formula).
struct RunningStats {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }
    void merge(const RunningStats& o);
    double variance_unbiased() const;
};

SimulationResult to_simulation_result(const RunningStats& stats, std::uint64_t seed);

// Runs per_sample(rng) for every sample in fixed chunks, merging chunk
// statistics in index order. Shared by the E[z] estimator and the p_B
// estimators. Results do not depend on the worker count.
template <typename F>
RunningStats chunked_accumulate(std::size_t samples, std::uint64_t seed, std::size_t chunk_size,
                                int workers, F&& per_sample) {
    if (samples == 0) throw StructuralError("sample count must be at least 1");
    if (chunk_size == 0) throw StructuralError("chunk size must be at least 1");
    const std::size_t chunks = (samples + chunk_size - 1) / chunk_size;
    std::vector<RunningStats> summaries(chunks);

    auto run_chunk = [&](std::size_t k) {
        std::mt19937_64 rng = derive_stream(seed, k);
        const std::size_t begin = k * chunk_size;
        const std::size_t end = std::min(samples, begin + chunk_size);
        RunningStats s;
        for (std::size_t i = begin; i < end; ++i) s.add(per_sample(rng));
        summaries[k] = s;
    };

    if (workers <= 1 || chunks == 1) {
        for (std::size_t k = 0; k < chunks; ++k) run_chunk(k);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next.fetch_add(1); k < chunks; k = next.fetch_add(1))
                run_chunk(k);
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(workers, static_cast<int>(chunks));
        pool.reserve(count);
        for (int w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunningStats total;
    for (const RunningStats& s : summaries) total.merge(s);
    return total;
}

} // namespace pathbound
