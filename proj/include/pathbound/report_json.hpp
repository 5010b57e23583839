// Report rendering: stable-order JSON with 17-significant-digit numbers,
// and aligned text tables carrying the same values.

#pragma once

#include "pathbound/bounds.hpp"
#include "pathbound/graph.hpp"
#include "pathbound/montecarlo.hpp"

#include <string>

namespace pathbound {

std::string format_double(double v); // %.17g

std::string render_validation_json(const GraphDiagnostics& d, const DegradationGraph& g);
std::string render_validation_table(const GraphDiagnostics& d, const DegradationGraph& g);

std::string render_simulation_json(const SimulationResult& r, const SimConfig& cfg);
std::string render_simulation_table(const SimulationResult& r, const SimConfig& cfg);

std::string render_report_json(const BoundReport& r);
std::string render_report_table(const BoundReport& r);

const char* family_spec_name(FamilySpec f);
const char* pb_variant_name(PbVariant v);
const char* pb_source_name(PbSource s);

} // namespace pathbound
