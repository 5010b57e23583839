// pathbound CLI: validate degradation graphs, compute bound reports, and run
// Monte Carlo simulations. Exit codes: 0 success, 1 validation/data failure,
// 2 usage error.

#include "pathbound/bounds.hpp"
#include "pathbound/graph.hpp"
#include "pathbound/montecarlo.hpp"
#include "pathbound/report_json.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

struct Options {
    std::string graph_path;
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    double beta = 1.0;
    std::string family = "deterministic-optimal";
    int k = 1;
    std::string pb_variant = "rederived-power";
    std::string pb_source = "formula-mc";
    std::size_t dfm_set_size = 0; // 0 = row count
    bool no_clamp = false;
    int workers = 1;
    std::size_t chunk_size = 4096;
    std::string format = "table";
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("graph", opt.graph_path, "graph file")->required();
    cmd->add_option("--seed", opt.seed, "random seed (all randomness derives from it)");
    cmd->add_option("--output-format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
}

void add_bound_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--samples", opt.samples, "Monte Carlo samples per estimate");
    cmd->add_option("--beta", opt.beta, "slope in the residual-mean condition (>= 1)");
    cmd->add_option("--family", opt.family, "basis family")
        ->check(CLI::IsMember({"deterministic-optimal", "k-cheapest-paths"}));
    cmd->add_option("--k", opt.k, "path count for k-cheapest-paths");
    cmd->add_option("--pb-variant", opt.pb_variant, "closed-form variant")
        ->check(CLI::IsMember({"rederived-power", "as-printed"}));
    cmd->add_option("--pb-source", opt.pb_source, "probability source for the lower bound")
        ->check(CLI::IsMember({"formula-mc", "closed-form"}));
    cmd->add_option("--dfm-set-size", opt.dfm_set_size, "DFM sum size (0 = row count)");
    cmd->add_flag("--no-clamp", opt.no_clamp, "feed raw (possibly negative) closed-form values");
    cmd->add_option("--workers", opt.workers, "Monte Carlo worker threads");
    cmd->add_option("--chunk-size", opt.chunk_size, "Monte Carlo chunk size");
}

pathbound::BoundConfig to_config(const Options& opt, bool include_mc) {
    pathbound::BoundConfig cfg;
    cfg.beta = opt.beta;
    cfg.family = opt.family == "deterministic-optimal"
                     ? pathbound::FamilySpec::deterministic_optimal
                     : pathbound::FamilySpec::k_cheapest_paths;
    cfg.k = opt.k;
    cfg.pb_variant = opt.pb_variant == "as-printed" ? pathbound::PbVariant::as_printed
                                                    : pathbound::PbVariant::rederived_power;
    cfg.pb_source = opt.pb_source == "closed-form" ? pathbound::PbSource::closed_form
                                                   : pathbound::PbSource::formula_mc;
    cfg.mc_samples = opt.samples;
    cfg.seed = opt.seed;
    cfg.clamp_negative_pb = !opt.no_clamp;
    cfg.dfm_set_size = opt.dfm_set_size;
    cfg.include_mc = include_mc;
    cfg.workers = opt.workers;
    cfg.chunk_size = opt.chunk_size;
    return cfg;
}

int check_flag_domains(const Options& opt) {
    if (opt.beta < 1.0) {
        std::cerr << "error: beta must be >= 1 (got " << opt.beta << ")\n";
        return 2;
    }
    if (opt.samples < 1) {
        std::cerr << "error: samples must be >= 1\n";
        return 2;
    }
    if (opt.k < 1) {
        std::cerr << "error: k must be >= 1\n";
        return 2;
    }
    if (opt.workers < 1) {
        std::cerr << "error: workers must be >= 1\n";
        return 2;
    }
    if (opt.chunk_size < 1) {
        std::cerr << "error: chunk-size must be >= 1\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified bounds on expected shortest-path lengths in Weibull degradation graphs"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* validate_cmd = app.add_subcommand("validate", "check a graph file");
    add_common_flags(validate_cmd, opt);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound report without MC cross-checks");
    add_common_flags(bounds_cmd, opt);
    add_bound_flags(bounds_cmd, opt);

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of E[z]");
    add_common_flags(simulate_cmd, opt);
    simulate_cmd->add_option("--samples", opt.samples, "Monte Carlo samples");
    simulate_cmd->add_option("--workers", opt.workers, "Monte Carlo worker threads");
    simulate_cmd->add_option("--chunk-size", opt.chunk_size, "Monte Carlo chunk size");

    CLI::App* report_cmd = app.add_subcommand("report", "full bound report with MC cross-checks");
    add_common_flags(report_cmd, opt);
    add_bound_flags(report_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (int rc = check_flag_domains(opt)) return rc;
    const bool json = opt.format == "json";

    try {
        const pathbound::DegradationGraph g = pathbound::parse_graph_file(opt.graph_path);

        if (validate_cmd->parsed()) {
            const pathbound::GraphDiagnostics d = pathbound::validate(g);
            std::cout << (json ? pathbound::render_validation_json(d, g)
                               : pathbound::render_validation_table(d, g));
            return d.pass() ? 0 : 1;
        }
        if (simulate_cmd->parsed()) {
            const pathbound::SimConfig cfg{opt.samples, opt.seed, opt.chunk_size, opt.workers};
            const pathbound::SimulationResult r = pathbound::estimate_expected_shortest(g, cfg);
            std::cout << (json ? pathbound::render_simulation_json(r, cfg)
                               : pathbound::render_simulation_table(r, cfg));
            return 0;
        }
        const bool include_mc = report_cmd->parsed();
        const pathbound::BoundReport r = pathbound::build_report(g, to_config(opt, include_mc));
        std::cout << (json ? pathbound::render_report_json(r) : pathbound::render_report_table(r));
        return 0;
    } catch (const pathbound::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
