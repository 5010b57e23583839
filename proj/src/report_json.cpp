#include "pathbound/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace pathbound {

namespace {

// Minimal ordered JSON emitter: keys appear exactly in insertion order and
// doubles are rendered with a fixed format, so equal reports serialize to
// identical bytes.
class JsonOut {
public:
    JsonOut& begin_object() { return token("{"); }
    JsonOut& end_object() { return close("}"); }
    JsonOut& begin_array() { return token("["); }
    JsonOut& end_array() { return close("]"); }

    JsonOut& key(const std::string& k) {
        comma();
        out_ << '"' << k << "\":";
        fresh_ = true;
        return *this;
    }

    JsonOut& value(double v) { return raw(format_double(v)); }
    JsonOut& value(int v) { return raw(std::to_string(v)); }
    JsonOut& value(std::size_t v) { return raw(std::to_string(v)); }
    JsonOut& value(bool v) { return raw(v ? "true" : "false"); }
    JsonOut& value(const std::string& s) {
        comma();
        out_ << '"';
        for (char c : s) {
            if (c == '"' || c == '\\') out_ << '\\';
            out_ << c;
        }
        out_ << '"';
        return *this;
    }

    std::string str() const { return out_.str(); }

private:
    JsonOut& token(const char* t) {
        comma();
        out_ << t;
        fresh_ = true;
        return *this;
    }
    JsonOut& close(const char* t) {
        out_ << t;
        fresh_ = false;
        return *this;
    }
    JsonOut& raw(const std::string& t) {
        comma();
        out_ << t;
        return *this;
    }
    void comma() {
        if (!fresh_) out_ << ',';
        fresh_ = false;
    }

    std::ostringstream out_;
    bool fresh_ = true;
};

void emit_int_array(JsonOut& j, const std::vector<int>& xs, bool one_based) {
    j.begin_array();
    for (int x : xs) j.value(one_based ? x + 1 : x);
    j.end_array();
}

// The worker count stays out of the provenance block: results are identical
// for any worker count, and reports must be byte-identical across them.
void emit_config(JsonOut& j, const BoundConfig& cfg) {
    j.key("config").begin_object();
    j.key("seed").value(cfg.seed);
    j.key("samples").value(cfg.mc_samples);
    j.key("beta").value(cfg.beta);
    j.key("family").value(std::string(family_spec_name(cfg.family)));
    j.key("k").value(cfg.k);
    j.key("pb_variant").value(std::string(pb_variant_name(cfg.pb_variant)));
    j.key("pb_source").value(std::string(pb_source_name(cfg.pb_source)));
    j.key("dfm_set_size").value(cfg.dfm_set_size);
    j.key("clamp_negative_pb").value(cfg.clamp_negative_pb);
    j.key("include_mc").value(cfg.include_mc);
    j.key("chunk_size").value(cfg.chunk_size);
    j.end_object();
}

std::string one_based_list(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i] + 1);
    }
    return s + "}";
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* family_spec_name(FamilySpec f) {
    return f == FamilySpec::deterministic_optimal ? "deterministic-optimal" : "k-cheapest-paths";
}

const char* pb_variant_name(PbVariant v) {
    return v == PbVariant::rederived_power ? "rederived-power" : "as-printed";
}

const char* pb_source_name(PbSource s) {
    return s == PbSource::formula_mc ? "formula-mc" : "closed-form";
}

std::string render_validation_json(const GraphDiagnostics& d, const DegradationGraph& g) {
    JsonOut j;
    j.begin_object();
    j.key("nodes").value(g.node_count());
    j.key("edges").value(static_cast<int>(g.edge_count()));
    j.key("acyclic").value(d.acyclic);
    j.key("sink_reachable").value(d.sink_reachable);
    j.key("params_positive").value(d.params_positive);
    j.key("all_nodes_reach_sink").value(d.all_nodes_reach_sink);
    j.key("pass").value(d.pass());
    j.key("issues").begin_array();
    for (const auto& s : d.issues) j.value(s);
    j.end_array();
    j.end_object();
    return j.str() + "\n";
}

std::string render_validation_table(const GraphDiagnostics& d, const DegradationGraph& g) {
    std::ostringstream t;
    t << "nodes: " << g.node_count() << "\n";
    t << "edges: " << g.edge_count() << "\n";
    t << "acyclic: " << (d.acyclic ? "true" : "false") << "\n";
    t << "sink_reachable: " << (d.sink_reachable ? "true" : "false") << "\n";
    t << "params_positive: " << (d.params_positive ? "true" : "false") << "\n";
    t << "all_nodes_reach_sink: " << (d.all_nodes_reach_sink ? "true" : "false") << "\n";
    t << "pass: " << (d.pass() ? "true" : "false") << "\n";
    for (const auto& s : d.issues) t << "issue: " << s << "\n";
    return t.str();
}

namespace {

void emit_simulation(JsonOut& j, const SimulationResult& r) {
    j.begin_object();
    j.key("mean").value(r.mean);
    j.key("stderr").value(r.std_err);
    j.key("ci95_low").value(r.ci95.first);
    j.key("ci95_high").value(r.ci95.second);
    j.key("samples").value(r.samples);
    j.key("seed").value(r.seed);
    j.end_object();
}

} // namespace

std::string render_simulation_json(const SimulationResult& r, const SimConfig& cfg) {
    JsonOut j;
    j.begin_object();
    j.key("config").begin_object();
    j.key("seed").value(cfg.seed);
    j.key("samples").value(cfg.samples);
    j.key("chunk_size").value(cfg.chunk_size);
    j.end_object();
    j.key("result");
    emit_simulation(j, r);
    j.end_object();
    return j.str() + "\n";
}

std::string render_simulation_table(const SimulationResult& r, const SimConfig& cfg) {
    std::ostringstream t;
    t << "samples: " << r.samples << "\n";
    t << "seed: " << r.seed << "\n";
    t << "chunk_size: " << cfg.chunk_size << "\n";
    t << "mean: " << format_double(r.mean) << "\n";
    t << "stderr: " << format_double(r.std_err) << "\n";
    t << "ci95: [" << format_double(r.ci95.first) << ", " << format_double(r.ci95.second)
      << "]\n";
    return t.str();
}

std::string render_report_json(const BoundReport& r) {
    JsonOut j;
    j.begin_object();
    emit_config(j, r.config);
    j.key("graph").begin_object();
    j.key("nodes").value(r.nodes);
    j.key("edges").value(r.edges);
    j.end_object();
    j.key("beta_condition_ok").value(r.beta_condition_ok);
    j.key("zeta").value(r.zeta);
    j.key("dfm_bound").value(r.dfm_bound);
    j.key("expectation_lower_bound").value(r.lower_bound);
    j.key("witness_available").value(r.witness_available);
    j.key("witness_source").value(r.witness_source);
    j.key("witness").begin_array();
    for (double x : r.witness) j.value(x);
    j.end_array();
    j.key("family").begin_array();
    for (const auto& b : r.family) emit_int_array(j, b, true);
    j.end_array();
    j.key("family_index_set");
    emit_int_array(j, r.family_index_set, true);
    j.key("per_basis").begin_array();
    for (const PerBasisReport& pb : r.per_basis) {
        j.begin_object();
        j.key("basis");
        emit_int_array(j, pb.indices, true);
        j.key("index_set");
        emit_int_array(j, pb.admissible_columns, true);
        j.key("pb_closed_raw").value(pb.pb_closed_raw);
        j.key("pb_closed_clamped").value(pb.pb_closed_clamped);
        j.key("pb_formula_mc").value(pb.pb_formula.estimate);
        j.key("pb_formula_stderr").value(pb.pb_formula.std_err);
        if (pb.pb_indicator) {
            j.key("pb_indicator_mc").value(pb.pb_indicator->estimate);
            j.key("pb_indicator_stderr").value(pb.pb_indicator->std_err);
        }
        j.key("contribution").value(pb.contribution);
        j.end_object();
    }
    j.end_array();
    if (r.mc) {
        j.key("mc");
        emit_simulation(j, *r.mc);
    }
    j.end_object();
    return j.str() + "\n";
}

std::string render_report_table(const BoundReport& r) {
    std::ostringstream t;
    t << "graph: " << r.nodes << " nodes, " << r.edges << " edges\n";
    t << "config: seed=" << r.config.seed << " samples=" << r.config.mc_samples
      << " beta=" << format_double(r.config.beta) << " family=" << family_spec_name(r.config.family)
      << " k=" << r.config.k << " pb_variant=" << pb_variant_name(r.config.pb_variant)
      << " pb_source=" << pb_source_name(r.config.pb_source)
      << " dfm_set_size=" << r.config.dfm_set_size
      << " clamp_negative_pb=" << (r.config.clamp_negative_pb ? "true" : "false")
      << " include_mc=" << (r.config.include_mc ? "true" : "false")
      << " chunk_size=" << r.config.chunk_size << "\n";
    t << "beta_condition_ok: " << (r.beta_condition_ok ? "true" : "false") << "\n";
    t << "zeta: " << format_double(r.zeta) << "\n";
    t << "dfm_bound: " << format_double(r.dfm_bound) << "\n";
    t << "expectation_lower_bound: " << format_double(r.lower_bound) << "\n";
    t << "witness_available: " << (r.witness_available ? "true" : "false") << "\n";
    if (r.witness_available) {
        t << "witness_source: " << r.witness_source << "\n";
        t << "witness:";
        for (double x : r.witness) t << " " << format_double(x);
        t << "\n";
    }
    t << "family_index_set: " << one_based_list(r.family_index_set) << "\n";
    t << "per_basis:\n";
    for (const PerBasisReport& pb : r.per_basis) {
        t << "  basis " << one_based_list(pb.indices) << " index_set "
          << one_based_list(pb.admissible_columns) << "\n";
        t << "    pb_closed_raw=" << format_double(pb.pb_closed_raw)
          << " pb_closed_clamped=" << format_double(pb.pb_closed_clamped) << "\n";
        t << "    pb_formula_mc=" << format_double(pb.pb_formula.estimate) << " +/- "
          << format_double(pb.pb_formula.std_err) << "\n";
        if (pb.pb_indicator)
            t << "    pb_indicator_mc=" << format_double(pb.pb_indicator->estimate) << " +/- "
              << format_double(pb.pb_indicator->std_err) << "\n";
        t << "    contribution=" << format_double(pb.contribution) << "\n";
    }
    if (r.mc) {
        t << "mc_mean: " << format_double(r.mc->mean) << "\n";
        t << "mc_stderr: " << format_double(r.mc->std_err) << "\n";
        t << "mc_ci95: [" << format_double(r.mc->ci95.first) << ", "
          << format_double(r.mc->ci95.second) << "]\n";
        t << "mc_samples: " << r.mc->samples << "\n";
    }
    return t.str();
}

} // namespace pathbound
