#include "hqcs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "hqcs/memsched.hpp"
#include "hqcs/oracle.hpp"
#include "hqcs/pipesim.hpp"
#include "hqcs/report.hpp"
#include "hqcs/sampler.hpp"
#include "hqcs/verify.hpp"

namespace hqcs::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default (n, omega) from the environment.
SamplerConfig default_params() {
  SamplerConfig cfg;
  const char* env = std::getenv(kParamsEnv);
  if (!env || !*env) return cfg;
  const std::string v(env);
  if (v == "hqc128") return cfg;
  if (v == "hqc128-r") {
    cfg.omega = kHqc128OmegaR;
    return cfg;
  }
  throw UsageError(std::string(kParamsEnv) + ": unknown parameter set '" + v + "' (hqc128, hqc128-r)");
}

struct CommonFlags {
  SamplerConfig cfg;
  std::string seed_hex = std::string(2 * kDefaultSeedBytes, '0');
  std::string xof = "std";
  std::vector<std::uint32_t> words;
  bool json_out = false;

  void add_params(CLI::App* sub) {
    sub->add_option("--n", cfg.n, "ring degree");
    sub->add_option("--omega", cfg.omega, "target weight");
    sub->add_option("--word-width", cfg.word_width, "memory word width in bits (8, 16, 32, 64)");
  }
  void add_stream(CLI::App* sub) {
    sub->add_option("--seed-hex", seed_hex, "seed as hex (default 40 zero bytes)");
    sub->add_option("--xof", xof, "word source: std or stub");
    sub->add_option("--words", words, "stub words, comma separated")->delimiter(',');
  }
  void add_json(CLI::App* sub) { sub->add_flag("--json", json_out, "emit a single JSON report"); }

  Seed seed() const {
    try {
      return Seed::from_hex(seed_hex);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--seed-hex: ") + e.what());
    }
  }

  XofStream stream() const {
    const XofBackend backend = parse_backend(xof);
    if (backend == XofBackend::Stub && words.empty()) throw UsageError("--xof stub needs --words");
    if (backend == XofBackend::Standard && !words.empty()) throw UsageError("--words requires --xof stub");
    return XofStream::create(seed(), backend, words);
  }

  json stream_params() const {
    json p = {{"xof", std::string(backend_name(parse_backend(xof)))}};
    if (parse_backend(xof) == XofBackend::Stub) {
      p["words"] = words;
    } else {
      p["seed_hex"] = seed().to_hex();
    }
    return p;
  }

  json params() const { return {{"n", cfg.n}, {"omega", cfg.omega}, {"word_width", cfg.word_width}}; }
};

json merge(json a, const json& b) {
  a.update(b);
  return a;
}

int cmd_sample(const CommonFlags& f, const std::string& alg_name, bool counters, std::ostream& out) {
  f.cfg.validate();
  const SamplerAlgorithm alg = parse_algorithm(alg_name);
  XofStream stream = f.stream();
  const SampleResult r = sample(alg, f.cfg, stream);
  if (f.json_out) {
    json params = merge(f.params(), f.stream_params());
    params["alg"] = alg_name;
    out << report::run_report("sample", params, report::sample_outputs(r),
                              counters ? report::counters_json(r.counters) : json::object())
               .dump()
        << '\n';
  } else {
    out << r.dense.to_hex() << '\n' << report::support_json(r.support).dump() << '\n';
    if (counters) out << report::counters_json(r.counters).dump() << '\n';
  }
  return kExitOk;
}

int cmd_keygen(const CommonFlags& f, const std::string& schedule, std::ostream& out) {
  f.cfg.validate();
  KeygenRun run;
  if (schedule == "joint") {
    run = keygen_joint(f.cfg, f.seed());
  } else if (schedule == "baseline") {
    run = keygen_baseline(f.cfg, f.seed());
  } else {
    throw UsageError("--schedule must be joint or baseline");
  }
  json params = f.params();
  params["seed_hex"] = f.seed().to_hex();
  params["schedule"] = schedule;
  out << report::run_report("keygen", params, report::keygen_outputs(run)).dump() << '\n';
  return kExitOk;
}

int cmd_table(const CommonFlags& f, std::ostream& out) {
  const auto table = BarrettTable::build(f.cfg.n, f.cfg.omega);
  out << report::run_report("table", {{"n", f.cfg.n}, {"omega", f.cfg.omega}}, report::table_outputs(table)).dump()
      << '\n';
  if (!f.json_out) out << table.to_hex() << '\n';
  return kExitOk;
}

int cmd_simulate(const CommonFlags& f, PipeConfig pc, bool trace, std::size_t assert_constant, std::ostream& out,
                 std::ostream& err) {
  pc.sampler = f.cfg;
  pc.validate();
  XofStream stream = f.stream();
  const Simulation sim = simulate(pc, stream);

  json counters = report::trace_summary(sim.trace);
  counters["original_model_cycles"] = original_cycle_estimate(pc);
  json outputs = report::sample_outputs(sim.sample);
  bool constant = true;
  if (assert_constant > 0) {
    const auto salt_bytes = shake256(f.seed().bytes(), 8);
    std::uint64_t salt = 0;
    for (std::size_t k = 0; k < 8; ++k) salt |= std::uint64_t{salt_bytes[k]} << (8 * k);
    std::size_t divergent = 0;
    for (const auto& s : oracle::seeds(assert_constant, salt)) {
      XofStream st = XofStream::standard(s);
      const auto t = simulate(pc, st).trace;
      if (t.total_cycles != sim.trace.total_cycles || t.per_cycle != sim.trace.per_cycle) ++divergent;
    }
    constant = divergent == 0;
    counters["assert_constant"] = {{"seeds", assert_constant}, {"divergent", divergent}, {"constant", constant}};
  }

  json params = merge(f.params(), f.stream_params());
  params["perm_latency"] = pc.perm_latency;
  params["words_per_perm"] = pc.words_per_perm;
  out << report::run_report("simulate", params, outputs, counters).dump() << '\n';
  if (trace) {
    for (const auto& line : report::trace_lines(sim.trace)) out << line << '\n';
  }
  if (!constant) {
    err << "simulate: cycle count diverged across seeds\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const std::optional<std::string>& only, const std::optional<std::size_t>& seeds, std::ostream& out) {
  verify::Options opts;
  opts.only = only;
  opts.seeds = seeds;
  if (only) {
    const auto& names = verify::check_names();
    if (std::find(names.begin(), names.end(), *only) == names.end()) throw UsageError("--only: unknown check " + *only);
  }
  const auto results = verify::run_checks(opts);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << verify::to_json(r).dump() << '\n';
    if (!r.passed) ++failed;
  }
  out << json{{"checks", results.size()}, {"failed", failed}, {"passed", failed == 0}}.dump() << '\n';
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_bench(const CommonFlags& f, std::size_t seeds, std::ostream& out) {
  f.cfg.validate();
  using Clock = std::chrono::steady_clock;
  auto median_ns = [&](SamplerAlgorithm alg, SampleCounters& counters) {
    std::vector<double> times;
    for (const auto& s : oracle::seeds(seeds, 42)) {
      XofStream st = XofStream::standard(s);
      const auto t0 = Clock::now();
      counters = sample(alg, f.cfg, st).counters;
      times.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  SampleCounters c_orig, c_new;
  const double orig = median_ns(SamplerAlgorithm::Original, c_orig);
  const double fresh = median_ns(SamplerAlgorithm::New, c_new);
  json outputs = {{"median_ns_original", orig},
                  {"median_ns_new", fresh},
                  {"speedup", fresh > 0 ? orig / fresh : 0.0},
                  {"new_not_slower", fresh <= orig},
                  {"reference_hardware_cycles", {{"original", 2602}, {"new", 115}}}};
  json counters = {{"original", report::counters_json(c_orig)}, {"new", report::counters_json(c_new)}};
  json params = f.params();
  params["seeds"] = seeds;
  out << report::run_report("bench", params, outputs, counters).dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-weight sampling, Barrett table, ring arithmetic and pipeline model for HQC", "hqcs"};
  app.require_subcommand(1);

  CommonFlags f;
  try {
    f.cfg = default_params();
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  std::string alg = "new";
  bool counters = false;
  auto* sample = app.add_subcommand("sample", "sample one constant-weight polynomial");
  f.add_params(sample);
  f.add_stream(sample);
  f.add_json(sample);
  sample->add_option("--alg", alg, "orig, orig-rev or new");
  sample->add_flag("--counters", counters, "emit instrumentation counters");

  std::string schedule = "joint";
  auto* keygen = app.add_subcommand("keygen", "z = h*y + x under a memory schedule, with arena report");
  f.add_params(keygen);
  keygen->add_option("--seed-hex", f.seed_hex, "seed as hex (default 40 zero bytes)");
  keygen->add_option("--schedule", schedule, "joint or baseline");
  f.add_json(keygen);

  auto* table = app.add_subcommand("table", "dump the compressed Barrett factor table");
  table->add_option("--n", f.cfg.n, "ring degree");
  table->add_option("--omega", f.cfg.omega, "weight");
  f.add_json(table);

  PipeConfig pc;
  bool trace = false;
  std::size_t assert_constant = 0;
  auto* simulate_cmd = app.add_subcommand("simulate", "cycle-level pipeline simulation");
  f.add_params(simulate_cmd);
  f.add_stream(simulate_cmd);
  f.add_json(simulate_cmd);
  simulate_cmd->add_option("--perm-latency", pc.perm_latency, "cycles per XOF permutation");
  simulate_cmd->add_option("--words-per-perm", pc.words_per_perm, "32-bit words per permutation");
  simulate_cmd->add_flag("--trace", trace, "emit one JSON line per cycle");
  simulate_cmd->add_option("--assert-constant", assert_constant, "rerun with N seeds; fail on any divergence");

  std::optional<std::string> only;
  std::optional<std::size_t> verify_seeds;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--only", only, "run a single check");
  verify_cmd->add_option("--seeds", verify_seeds, "seed count for seed-driven checks");
  f.add_json(verify_cmd);

  std::size_t bench_seeds = 101;
  auto* bench = app.add_subcommand("bench", "wall-clock comparison of the original and new samplers");
  f.add_params(bench);
  bench->add_option("--seeds", bench_seeds, "number of seeds")->check(CLI::PositiveNumber);
  f.add_json(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(f, alg, counters, out);
    if (*keygen) return cmd_keygen(f, schedule, out);
    if (*table) return cmd_table(f, out);
    if (*simulate_cmd) return cmd_simulate(f, pc, trace, assert_constant, out, err);
    if (*verify_cmd) return cmd_verify(only, verify_seeds, out);
    if (*bench) return cmd_bench(f, bench_seeds, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hqcs::cli
