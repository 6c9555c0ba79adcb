#include "hqcs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hqcs/barrett.hpp"
#include "hqcs/cli.hpp"
#include "hqcs/memsched.hpp"
#include "hqcs/oracle.hpp"
#include "hqcs/pipesim.hpp"
#include "hqcs/report.hpp"
#include "hqcs/ring.hpp"
#include "hqcs/sampler.hpp"

namespace hqcs::verify {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t seed_count(const Options& opts, std::size_t full) { return opts.seeds.value_or(full); }

SamplerConfig hqc(std::uint32_t omega) { return SamplerConfig{kHqc128N, omega, 64}; }

// 1. Exact weight for every variant.
CheckResult check_weight(const Options& opts) {
  CheckResult r{1, "weight", true, json::object()};
  const auto t0 = Clock::now();
  std::size_t failures = 0, samples = 0;
  auto run = [&](std::uint32_t omega, std::size_t count, std::uint64_t salt,
                 std::initializer_list<SamplerAlgorithm> algs) {
    const auto cfg = hqc(omega);
    for (const auto& seed : oracle::seeds(count, salt)) {
      for (const auto alg : algs) {
        XofStream s = XofStream::standard(seed);
        const auto res = sample(alg, cfg, s);
        const std::set<std::uint32_t> distinct(res.support.coords.begin(), res.support.coords.end());
        ++samples;
        if (res.dense.weight() != omega || distinct.size() != omega) ++failures;
      }
    }
  };
  const std::size_t n66 = seed_count(opts, 10000);
  const std::size_t n75 = opts.seeds ? std::min<std::size_t>(*opts.seeds, 1000) : 1000;
  run(kHqc128Omega, n66, 1, {SamplerAlgorithm::New, SamplerAlgorithm::Original});
  run(kHqc128OmegaR, n75, 2,
      {SamplerAlgorithm::New, SamplerAlgorithm::Original, SamplerAlgorithm::OriginalReversed});
  r.seconds = seconds_since(t0);
  r.passed = failures == 0 && r.seconds <= 60.0;
  r.detail = {{"seeds_omega66", n66}, {"seeds_omega75", n75}, {"samples", samples},
              {"failures", failures}, {"seconds", r.seconds}, {"limit_seconds", 60}};
  return r;
}

// 2. sample_new == sample_original_reversed, bit for bit.
CheckResult check_equivalence(const Options& opts) {
  CheckResult r{2, "equivalence", true, json::object()};
  const auto t0 = Clock::now();
  const std::size_t count = seed_count(opts, 1000);
  std::size_t mismatches = 0, cases = 0;
  for (const std::uint32_t omega : {1u, 2u, 10u, 66u, 75u}) {
    const auto cfg = hqc(omega);
    for (const auto& seed : oracle::seeds(count, 100 + omega)) {
      XofStream a = XofStream::standard(seed);
      XofStream b = XofStream::standard(seed);
      const auto fresh = sample_new(cfg, a);
      const auto ref = sample_original_reversed(cfg, b);
      ++cases;
      if (fresh.dense != ref.dense || fresh.support != ref.support) ++mismatches;
    }
  }
  r.seconds = seconds_since(t0);
  r.passed = mismatches == 0;
  r.detail = {{"omegas", {1, 2, 10, 66, 75}}, {"seeds_per_omega", count}, {"cases", cases},
              {"mismatches", mismatches}};
  return r;
}

// 3. Barrett against the native remainder on every sampler modulus.
CheckResult check_barrett(const Options&) {
  CheckResult r{3, "barrett", true, json::object()};
  const auto t0 = Clock::now();
  const std::uint32_t n = kHqc128N, omega = kMaxOmega;
  const auto table = BarrettTable::build(n, omega);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> word;
  std::size_t mismatches = 0, inputs = 0;
  for (auto c = table.cursor();; c.step()) {
    const std::uint32_t m = n - c.index();
    const std::uint32_t f = c.factor();
    if (f != barrett_factor(m)) ++mismatches;
    auto one = [&](std::uint32_t w) {
      ++inputs;
      if (barrett_reduce(w, m, f) != w % m) ++mismatches;
    };
    for (const std::uint32_t w : {0u, m - 1, m, 0xffffffffu}) one(w);
    for (int k = 0; k < 100000; ++k) one(word(rng));
    if (c.index() == 0) break;
  }
  r.seconds = seconds_since(t0);
  r.passed = mismatches == 0;
  r.detail = {{"moduli", omega}, {"inputs", inputs}, {"mismatches", mismatches}};
  return r;
}

// 4. Compressed factor table.
CheckResult check_table(const Options&) {
  CheckResult r{4, "table", true, json::object()};
  const auto t0 = Clock::now();
  const std::uint32_t n = kHqc128N, omega = kMaxOmega;
  const auto table = BarrettTable::build(n, omega);
  std::size_t factor_mismatch = 0, bad_steps = 0;
  for (std::uint32_t i = 0; i < omega; ++i) {
    if (table.factor_for(i) != (std::uint64_t{1} << 32) / (n - i)) ++factor_mismatch;
  }
  for (std::uint32_t m = n - omega + 1; m < n; ++m) {
    const std::uint64_t d = (std::uint64_t{1} << 32) / m - (std::uint64_t{1} << 32) / (m + 1);
    if (d != 13 && d != 14) ++bad_steps;
  }
  r.seconds = seconds_since(t0);
  const bool payload_ok = table.payload_bits() == omega + 18 && table.uncompressed_bits() == 18 * omega;
  r.passed = factor_mismatch == 0 && bad_steps == 0 && payload_ok && r.seconds < 1.0;
  r.detail = {{"r_base", table.r_base()}, {"factor_mismatches", factor_mismatch}, {"bad_steps", bad_steps},
              {"payload_bits", table.payload_bits()}, {"uncompressed_bits", table.uncompressed_bits()},
              {"seconds", r.seconds}};
  return r;
}

// 5. Uniqueness comparisons: omega(omega-1)/2 versus omega.
CheckResult check_complexity(const Options&) {
  CheckResult r{5, "complexity", true, json::object()};
  const auto t0 = Clock::now();
  json rows = json::array();
  for (const std::uint32_t omega : {10u, 66u, 75u}) {
    const auto cfg = hqc(omega);
    const Seed seed = Seed::zeros();
    XofStream a = XofStream::standard(seed);
    XofStream b = XofStream::standard(seed);
    const auto orig = sample_original(cfg, a).counters.uniqueness_comparisons;
    const auto fresh = sample_new(cfg, b).counters.uniqueness_comparisons;
    const std::uint64_t want_orig = std::uint64_t{omega} * (omega - 1) / 2;
    const bool ok = orig == want_orig && fresh == omega;
    r.passed = r.passed && ok;
    rows.push_back({{"omega", omega}, {"original", orig}, {"new", fresh}, {"ok", ok}});
  }
  r.seconds = seconds_since(t0);
  r.detail = {{"rows", rows}};
  return r;
}

// 6. Sparse-dense multiply against convolve-then-reduce.
CheckResult check_ring(const Options&) {
  CheckResult r{6, "ring", true, json::object()};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  std::size_t mismatches = 0, cases = 0;
  json small = json::object();
  for (const std::size_t n : {7u, 63u, 64u, 65u}) {
    std::vector<bool> covered(n, false);
    for (int k = 0; k < 1000; ++k) {
      const DensePoly h = oracle::random_dense(n, rng);
      const DensePoly acc = oracle::random_dense(n, rng);
      std::vector<std::uint32_t> y;
      if (static_cast<std::size_t>(k) < n) {
        y = {static_cast<std::uint32_t>(k)};  // every single coordinate once
      } else {
        std::uniform_int_distribution<std::size_t> size(0, n);
        y = oracle::random_support(n, size(rng), rng);
      }
      for (const auto c : y) covered[c] = true;
      ++cases;
      if (mul_sparse_acc(h, SupportPoly{y}, acc) != oracle::convolve_then_reduce(h, y, acc)) ++mismatches;
    }
    const bool all = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    if (!all) r.passed = false;
    small[std::to_string(n)] = {{"cases", 1000}, {"all_coordinates_covered", all}};
  }
  for (int k = 0; k < 100; ++k) {
    const DensePoly h = oracle::random_dense(kHqc128N, rng);
    const DensePoly acc = k % 2 ? oracle::random_dense(kHqc128N, rng) : DensePoly(kHqc128N);
    const auto y = oracle::random_support(kHqc128N, kHqc128Omega, rng);
    ++cases;
    if (mul_sparse_acc(h, SupportPoly{y}, acc) != oracle::convolve_then_reduce(h, y, acc)) ++mismatches;
  }
  r.seconds = seconds_since(t0);
  r.passed = r.passed && mismatches == 0;
  r.detail = {{"small", small}, {"large_cases", 100}, {"cases", cases}, {"mismatches", mismatches}};
  return r;
}

// 7. Three-arena joint schedule versus the four-arena baseline.
CheckResult check_memsched(const Options& opts) {
  CheckResult r{7, "memsched", true, json::object()};
  const auto t0 = Clock::now();
  const auto cfg = hqc(kHqc128Omega);
  const std::size_t dense_cap = words_for_bits(cfg.n) * 64;
  const std::size_t count = seed_count(opts, 100);
  std::size_t z_mismatch = 0, oracle_mismatch = 0, shape_fail = 0, log_fail = 0;
  std::size_t joint_total = 0, base_total = 0;
  for (const auto& seed : oracle::seeds(count, 7)) {
    const auto joint = keygen_joint(cfg, seed);
    const auto base = keygen_baseline(cfg, seed);
    joint_total = joint.total_capacity_bits();
    base_total = base.total_capacity_bits();

    const bool joint_shape = joint.arenas.size() == 3 && joint.max_capacity_bits() <= dense_cap;
    const bool base_shape =
        base.arenas.size() == 4 && std::any_of(base.arenas.begin(), base.arenas.end(), [&](const Arena& a) {
          return a.capacity_bits() >= 2 * std::size_t{cfg.n};
        });
    if (!joint_shape || !base_shape || base_total - joint_total < cfg.n) ++shape_fail;

    if (joint.artifacts.z != base.artifacts.z) ++z_mismatch;
    const auto& a = joint.artifacts;
    if (a.z != oracle::convolve_then_reduce(a.h, a.y_support.coords, a.x)) ++oracle_mismatch;

    // z accumulation is XOR-modify only; y's explicit form is dead once h lands
    const auto& ram0 = joint.arenas[0].log();
    const auto& ram1 = joint.arenas[1].log();
    bool ok = std::all_of(ram0.begin(), ram0.end(), [](const Access& x) {
      return x.phase != Phase::Z || x.op == AccessOp::ModifyXor;
    });
    const auto first_h = std::find_if(ram1.begin(), ram1.end(),
                                      [](const Access& x) { return x.phase == Phase::H && x.op == AccessOp::Write; });
    ok = ok && first_h != ram1.end() &&
         std::none_of(first_h, ram1.end(), [](const Access& x) { return x.phase == Phase::Y; });
    if (!ok) ++log_fail;
  }
  r.seconds = seconds_since(t0);
  r.passed = z_mismatch == 0 && oracle_mismatch == 0 && shape_fail == 0 && log_fail == 0;
  r.detail = {{"seeds", count},
              {"joint_arenas", 3},
              {"baseline_arenas", 4},
              {"joint_total_capacity_bits", joint_total},
              {"baseline_total_capacity_bits", base_total},
              {"dense_capacity_bits", dense_cap},
              {"z_mismatches", z_mismatch},
              {"oracle_mismatches", oracle_mismatch},
              {"shape_failures", shape_fail},
              {"log_failures", log_fail}};
  return r;
}

std::vector<std::uint32_t> words_for_candidates(const SamplerConfig& cfg,
                                                const std::function<std::uint32_t(std::uint32_t)>& cand_of) {
  // the stream feeds i = omega-1 first; word w gives candidate i + w mod (n - i)
  std::vector<std::uint32_t> words;
  for (std::uint32_t k = 0; k < cfg.omega; ++k) {
    const std::uint32_t i = cfg.omega - 1 - k;
    words.push_back(cand_of(i) - i);
  }
  return words;
}

// Adversarial streams: every draw collides, or draws pile into one word.
std::vector<std::vector<std::uint32_t>> adversarial_streams(const SamplerConfig& cfg, std::size_t random_count) {
  std::vector<std::vector<std::uint32_t>> out;
  out.push_back(words_for_candidates(cfg, [&](std::uint32_t) { return cfg.n - 1; }));
  out.push_back(words_for_candidates(cfg, [&](std::uint32_t i) { return std::max(i, cfg.n - 1 - (i % 64)); }));
  out.push_back(words_for_candidates(cfg, [&](std::uint32_t i) { return i; }));
  out.push_back(words_for_candidates(cfg, [&](std::uint32_t i) { return i < 64 ? 63 : i; }));
  std::mt19937_64 rng(8);
  for (std::size_t k = 0; k < random_count; ++k) {
    // draws confined to a few words around the low-register boundary
    out.push_back(words_for_candidates(cfg, [&](std::uint32_t i) {
      std::uniform_int_distribution<std::uint32_t> d(i, std::min(cfg.n - 1, i + 70));
      return d(rng);
    }));
  }
  return out;
}

// 8. Cycle count and stage occupancy independent of the data.
CheckResult check_constant_cycle(const Options& opts) {
  CheckResult r{8, "constant-cycle", true, json::object()};
  const auto t0 = Clock::now();
  PipeConfig cfg;
  cfg.sampler = hqc(kHqc128Omega);
  const std::size_t count = seed_count(opts, 1000);

  std::optional<PipelineTrace> ref;
  std::size_t divergent = 0, functional = 0, runs = 0, with_hazards = 0, with_dups = 0;
  auto observe = [&](XofStream a, XofStream b) {
    const auto sim = simulate(cfg, a);
    const auto fresh = sample_new(cfg.sampler, b);
    ++runs;
    if (sim.sample.dense != fresh.dense || sim.sample.support != fresh.support) ++functional;
    if (sim.trace.hazards_forwarded > 0) ++with_hazards;
    if (sim.sample.counters.duplicate_resolutions > 0) ++with_dups;
    if (!ref) {
      ref = sim.trace;
    } else if (sim.trace.total_cycles != ref->total_cycles || sim.trace.per_cycle != ref->per_cycle) {
      ++divergent;
    }
  };
  for (const auto& seed : oracle::seeds(count, 8)) observe(XofStream::standard(seed), XofStream::standard(seed));
  for (const auto& words : adversarial_streams(cfg.sampler, 16)) observe(XofStream::stub(words), XofStream::stub(words));

  const std::uint64_t orig = original_cycle_estimate(cfg);
  r.seconds = seconds_since(t0);
  r.passed = divergent == 0 && functional == 0 && ref && ref->total_cycles < orig;
  r.detail = {{"runs", runs},
              {"random_seeds", count},
              {"divergent_runs", divergent},
              {"functional_mismatches", functional},
              {"runs_with_hazards", with_hazards},
              {"runs_with_duplicates", with_dups},
              {"total_cycles", ref ? ref->total_cycles : 0},
              {"original_model_cycles", orig},
              {"ratio", ref && ref->total_cycles ? static_cast<double>(orig) / ref->total_cycles : 0.0},
              {"perm_latency", cfg.perm_latency},
              {"words_per_perm", cfg.words_per_perm},
              {"reference_hardware_cycles", {{"original", 2602}, {"new", 115}}}};
  return r;
}

// 9. Forwarded reads keep the functional result.
CheckResult check_hazard(const Options&) {
  CheckResult r{9, "hazard", true, json::object()};
  const auto t0 = Clock::now();
  json cases = json::array();
  struct Case {
    std::string name;
    SamplerConfig cfg;
    std::function<std::uint32_t(std::uint32_t)> cand;
  };
  const std::vector<Case> all = {
      {"same-high-word-distinct", hqc(32), [](std::uint32_t i) { return 64u * 200 + (31 - i); }},
      {"all-collide", hqc(66), [](std::uint32_t) { return kHqc128N - 1; }},
      {"low-word", SamplerConfig{1000, 40, 64}, [](std::uint32_t i) { return std::max(i, 50u); }},
      {"narrow-words", SamplerConfig{kHqc128N, 66, 8}, [](std::uint32_t i) { return 8 * 300 + (i % 8); }},
  };
  for (const auto& c : all) {
    PipeConfig pc;
    pc.sampler = c.cfg;
    const auto words = words_for_candidates(c.cfg, c.cand);
    XofStream a = XofStream::stub(words);
    XofStream b = XofStream::stub(words);
    const auto sim = simulate(pc, a);
    const auto fresh = sample_new(c.cfg, b);
    const bool equal = sim.sample.dense == fresh.dense && sim.sample.support == fresh.support;
    const bool ok = equal && sim.trace.hazards_forwarded >= 1;
    r.passed = r.passed && ok;
    cases.push_back({{"case", c.name}, {"hazards_forwarded", sim.trace.hazards_forwarded},
                     {"matches_sample_new", equal}, {"ok", ok}});
  }
  r.seconds = seconds_since(t0);
  r.detail = {{"cases", cases}};
  return r;
}

// 10. Byte-reproducible command output and lossless hex.
CheckResult check_determinism(const Options&) {
  CheckResult r{10, "determinism", true, json::object()};
  const auto t0 = Clock::now();
  const std::string zero_seed(80, '0');
  const std::vector<std::vector<std::string>> commands = {
      {"sample", "--n", "17669", "--omega", "66", "--alg", "new", "--seed-hex", zero_seed},
      {"sample", "--omega", "66", "--alg", "orig", "--counters", "--json"},
      {"sample", "--omega", "75", "--alg", "orig-rev", "--seed-hex", "0102030405"},
      {"sample", "--n", "10", "--omega", "3", "--alg", "new", "--xof", "stub", "--words", "0,1,2", "--json"},
      {"keygen", "--omega", "66"},
      {"table", "--n", "17669", "--omega", "75"},
      {"simulate", "--omega", "66", "--trace"},
  };
  std::size_t failures = 0;
  json rows = json::array();
  for (const auto& cmd : commands) {
    std::ostringstream o1, o2, e1, e2;
    const int c1 = cli::run(cmd, o1, e1);
    const int c2 = cli::run(cmd, o2, e2);
    const bool ok = c1 == 0 && c2 == 0 && o1.str() == o2.str() && !o1.str().empty();
    if (!ok) ++failures;
    rows.push_back({{"command", cmd.front()}, {"bytes", o1.str().size()}, {"ok", ok}});
  }

  std::mt19937_64 rng(10);
  std::size_t hex_failures = 0;
  for (const std::size_t n : {1u, 7u, 8u, 9u, 63u, 64u, 65u, 17669u}) {
    for (int k = 0; k < 50; ++k) {
      const DensePoly p = oracle::random_dense(n, rng);
      const std::string hex = p.to_hex();
      if (hex.size() != 2 * words_for_bits(n, 8) || DensePoly::from_hex(hex, n) != p) ++hex_failures;
    }
  }
  for (const auto& seed : oracle::seeds(20, 10, 33)) {
    if (Seed::from_hex(seed.to_hex()) != seed) ++hex_failures;
  }
  r.seconds = seconds_since(t0);
  r.passed = failures == 0 && hex_failures == 0;
  r.detail = {{"commands", rows}, {"hex_roundtrip_failures", hex_failures}};
  return r;
}

using CheckFn = CheckResult (*)(const Options&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"weight", check_weight},         {"equivalence", check_equivalence},
      {"barrett", check_barrett},       {"table", check_table},
      {"complexity", check_complexity}, {"ring", check_ring},
      {"memsched", check_memsched},     {"constant-cycle", check_constant_cycle},
      {"hazard", check_hazard},         {"determinism", check_determinism},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const Options& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(opts);
  }
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_checks(const Options& opts) {
  std::vector<CheckResult> out;
  if (opts.only) {
    out.push_back(run_check(*opts.only, opts));
    return out;
  }
  for (const auto& name : check_names()) out.push_back(run_check(name, opts));
  return out;
}

json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace hqcs::verify
