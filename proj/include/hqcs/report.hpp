#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hqcs/barrett.hpp"
#include "hqcs/memsched.hpp"
#include "hqcs/pipesim.hpp"
#include "hqcs/sampler.hpp"
#include "hqcs/xof.hpp"

namespace hqcs::report {

using nlohmann::json;

json counters_json(const SampleCounters& c);
json support_json(const SupportPoly& s);

/// {"command", "parameters", "outputs", "counters"}; no wall-clock fields,
/// so identical inputs render identical bytes.
json run_report(const std::string& command, json parameters, json outputs, json counters = json::object());

json sample_outputs(const SampleResult& r);
json table_outputs(const BarrettTable& t);
json keygen_outputs(const KeygenRun& run);
json arena_json(const Arena& a);
json trace_summary(const PipelineTrace& t);

/// One compact JSON object per cycle: {"cycle": c, "stages": [6 x 0/1]}.
std::vector<std::string> trace_lines(const PipelineTrace& t);

}  // namespace hqcs::report
