#include "hqcs/report.hpp"

namespace hqcs::report {

json counters_json(const SampleCounters& c) {
  return {{"uniqueness_comparisons", c.uniqueness_comparisons},
          {"words_consumed", c.words_consumed},
          {"duplicate_resolutions", c.duplicate_resolutions}};
}

json support_json(const SupportPoly& s) { return json(s.coords); }

json run_report(const std::string& command, json parameters, json outputs, json counters) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"outputs", std::move(outputs)},
          {"counters", std::move(counters)}};
}

json sample_outputs(const SampleResult& r) {
  return {{"dense_hex", r.dense.to_hex()}, {"support", support_json(r.support)}, {"weight", r.dense.weight()}};
}

json table_outputs(const BarrettTable& t) {
  return {{"n", t.n()},
          {"omega", t.omega()},
          {"r_base", t.r_base()},
          {"correction", t.correction()},
          {"payload_bits", t.payload_bits()},
          {"uncompressed_bits", t.uncompressed_bits()},
          {"hex", t.to_hex()}};
}

json arena_json(const Arena& a) {
  return {{"id", a.id()},
          {"words", a.words()},
          {"word_bits", a.word_bits()},
          {"capacity_bits", a.capacity_bits()},
          {"xor_modify", a.has_xor_modify()},
          {"reads", a.count(AccessOp::Read)},
          {"writes", a.count(AccessOp::Write)},
          {"modify_xor", a.count(AccessOp::ModifyXor)}};
}

json keygen_outputs(const KeygenRun& run) {
  const auto& a = run.artifacts;
  json arenas = json::array();
  for (const auto& ar : run.arenas) arenas.push_back(arena_json(ar));
  return {{"h_hex", a.h.to_hex()},
          {"x_hex", a.x.to_hex()},
          {"y_support", support_json(a.y_support)},
          {"y_hex", a.y_dense.to_hex()},
          {"z_hex", a.z.to_hex()},
          {"arenas", std::move(arenas)},
          {"arena_count", run.arenas.size()},
          {"total_capacity_bits", run.total_capacity_bits()},
          {"max_capacity_bits", run.max_capacity_bits()}};
}

json trace_summary(const PipelineTrace& t) {
  return {{"total_cycles", t.total_cycles},
          {"hazards_forwarded", t.hazards_forwarded},
          {"epilogue_writes", t.epilogue_writes},
          {"stall_cycles", t.stall_cycles},
          {"permutations", t.permutations}};
}

std::vector<std::string> trace_lines(const PipelineTrace& t) {
  std::vector<std::string> out;
  out.reserve(t.per_cycle.size());
  for (std::size_t c = 0; c < t.per_cycle.size(); ++c) {
    json stages = json::array();
    for (const bool b : t.per_cycle[c]) stages.push_back(b ? 1 : 0);
    out.push_back(json{{"cycle", c}, {"stages", std::move(stages)}}.dump());
  }
  return out;
}

}  // namespace hqcs::report
