#include "hqcs/pipesim.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace hqcs {

void PipeConfig::validate() const {
  sampler.validate();
  if (perm_latency < 1) throw std::invalid_argument("perm_latency must be at least 1");
  if (words_per_perm < 1) throw std::invalid_argument("words_per_perm must be at least 1");
}

namespace {

struct Schedule {
  std::vector<std::uint64_t> entry;  // cycle at which iteration t occupies S1
  std::uint64_t stall_cycles = 0;
  std::uint64_t permutations = 0;
  std::uint64_t epilogue = 0;
  std::uint64_t total = 0;
};

Schedule make_schedule(const PipeConfig& cfg) {
  Schedule s;
  const std::uint32_t omega = cfg.sampler.omega;
  std::uint64_t cycle = 0;
  std::uint32_t buffered = 0;
  s.entry.reserve(omega);
  for (std::uint32_t t = 0; t < omega; ++t) {
    if (buffered == 0) {
      cycle += cfg.perm_latency;
      s.stall_cycles += cfg.perm_latency;
      ++s.permutations;
      buffered = cfg.words_per_perm;
    }
    s.entry.push_back(cycle++);
    --buffered;
  }
  s.epilogue = words_for_bits(omega, cfg.sampler.word_width);
  s.total = omega == 0 ? 0 : s.entry.back() + kStageCount + s.epilogue;
  return s;
}

struct WordWrite {
  std::size_t addr;
  std::uint64_t value;
};

// State an iteration carries from S5 into S6.
struct Pending {
  WordWrite mem;
  std::optional<WordWrite> mirror;  // register copy of a low memory word
  std::optional<WordWrite> resolve;  // duplicate resolution, v[i] = 1
};

struct InFlight {
  std::uint32_t i = 0;
  std::uint32_t word = 0;
  std::uint32_t cand = 0;
  Pending pending{};
};

}  // namespace

std::uint64_t pipeline_cycles(const PipeConfig& cfg) {
  cfg.validate();
  return make_schedule(cfg).total;
}

Simulation simulate(const PipeConfig& cfg, XofStream& stream) {
  cfg.validate();
  const SamplerConfig& sc = cfg.sampler;
  const std::uint32_t omega = sc.omega;
  const unsigned wb = sc.word_width;
  const std::uint64_t bit1 = 1;

  const Schedule sched = make_schedule(cfg);
  Simulation sim;
  PipelineTrace& tr = sim.trace;
  tr.total_cycles = sched.total;
  tr.stall_cycles = sched.stall_cycles;
  tr.permutations = sched.permutations;
  tr.epilogue_writes = sched.epilogue;
  tr.per_cycle.assign(sched.total, StageOccupancy{});
  for (std::uint32_t t = 0; t < omega; ++t) {
    for (std::size_t st = 0; st < kStageCount; ++st) tr.per_cycle[sched.entry[t] + st][st] = true;
  }
  for (std::uint64_t e = 0; e < sched.epilogue; ++e) {
    tr.per_cycle[sched.total - sched.epilogue + e][static_cast<std::size_t>(Stage::Write)] = true;
  }

  std::vector<std::uint64_t> memory(words_for_bits(sc.n, wb), 0);
  std::vector<std::uint64_t> low_regs(sched.epilogue, 0);
  std::vector<InFlight> it(omega);
  SampleResult& res = sim.sample;
  res.support.coords.assign(omega, 0);

  const ReductionFactors factors(sc.n, omega);
  auto cursor = factors.cursor();

  // Iteration t occupies stage st at cycle entry[t] + st; walk cycles and
  // handle S1, S2, S5, S6 (S3/S4 carry no state in this model).
  const std::uint64_t data_cycles = omega == 0 ? 0 : sched.entry.back() + kStageCount;
  std::size_t next_s1 = 0, next_s2 = 0, next_s5 = 0, next_s6 = 0;
  for (std::uint64_t c = 0; c < data_cycles; ++c) {
    const InFlight* writer = nullptr;
    if (next_s6 < omega && sched.entry[next_s6] + 5 == c) writer = &it[next_s6];

    if (next_s5 < omega && sched.entry[next_s5] + 4 == c) {
      InFlight& f = it[next_s5];
      std::uint64_t hazard_hits = 0;
      auto forwarded = [&](std::optional<WordWrite> w, std::size_t addr) -> std::optional<std::uint64_t> {
        if (cfg.forwarding && writer && w && w->addr == addr) return w->value;
        return std::nullopt;
      };
      auto low_reg_view = [&](std::size_t addr) {
        std::uint64_t v = low_regs[addr];
        std::optional<std::uint64_t> fw;
        if (writer) {
          if (auto m = forwarded(writer->pending.mirror, addr)) fw = m;
          if (auto r = forwarded(writer->pending.resolve, addr)) fw = r;
        }
        if (fw) {
          ++hazard_hits;
          v = *fw;
        }
        return v;
      };

      const std::size_t a = f.cand / wb;
      std::uint64_t value;
      if (a < low_regs.size()) {
        value = low_reg_view(a);
      } else {
        value = memory[a];
        if (writer) {
          if (auto m = forwarded(writer->pending.mem, a)) {
            ++hazard_hits;
            value = *m;
          }
        }
      }
      const bool dup = (value >> (f.cand % wb)) & 1u;
      Pending p{{a, dup ? value : value | (bit1 << (f.cand % wb))}, std::nullopt, std::nullopt};
      if (a < low_regs.size()) p.mirror = p.mem;
      if (dup) {
        const std::size_t li = f.i / wb;
        const std::uint64_t base = (p.mirror && p.mirror->addr == li) ? p.mirror->value : low_reg_view(li);
        p.resolve = WordWrite{li, base | (bit1 << (f.i % wb))};
        ++res.counters.duplicate_resolutions;
      }
      ++res.counters.uniqueness_comparisons;
      tr.hazards_forwarded += hazard_hits > 0 ? 1 : 0;
      res.support.coords[f.i] = dup ? f.i : f.cand;
      f.pending = p;
      ++next_s5;
    }

    if (writer) {
      const Pending& p = writer->pending;
      memory[p.mem.addr] = p.mem.value;
      if (p.mirror) low_regs[p.mirror->addr] = p.mirror->value;
      if (p.resolve) low_regs[p.resolve->addr] = p.resolve->value;
      ++next_s6;
    }

    if (next_s2 < omega && sched.entry[next_s2] + 1 == c) {
      InFlight& f = it[next_s2];
      f.cand = f.i + barrett_reduce(f.word, sc.n - f.i, cursor.factor());
      cursor.step();
      ++next_s2;
    }

    if (next_s1 < omega && sched.entry[next_s1] == c) {
      InFlight& f = it[next_s1];
      f.i = omega - 1 - static_cast<std::uint32_t>(next_s1);
      f.word = stream.next_word();
      ++res.counters.words_consumed;
      ++next_s1;
    }
  }

  for (std::size_t k = 0; k < low_regs.size(); ++k) memory[k] = low_regs[k];

  res.dense = DensePoly(sc.n);
  const std::size_t per = kStorageBits / wb;
  for (std::size_t j = 0; j < memory.size(); ++j) {
    res.dense.xor_word(j / per, memory[j] << ((j % per) * wb));
  }
  return sim;
}

std::uint64_t original_cycle_estimate(const PipeConfig& cfg) {
  cfg.validate();
  const std::uint64_t w = cfg.sampler.omega;
  if (w == 0) return 0;
  const std::uint64_t perms = (w + cfg.words_per_perm - 1) / cfg.words_per_perm;
  return perms * cfg.perm_latency + w + 3 + w * (w - 1) / 2 + 2 * w;
}

std::vector<CycleProfileRow> cycle_profile(std::span<const PipeConfig> grid, const Seed& seed) {
  if (grid.empty()) throw std::invalid_argument("cycle profile needs a non-empty grid");
  std::vector<CycleProfileRow> rows;
  rows.reserve(grid.size());
  for (const auto& cfg : grid) {
    XofStream stream = XofStream::standard(seed);
    rows.push_back({cfg.sampler.omega, simulate(cfg, stream).trace.total_cycles});
  }
  return rows;
}

AffineFit fit_affine(std::span<const CycleProfileRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("affine fit needs at least two rows");
  const double m = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = r.omega, y = static_cast<double>(r.total_cycles);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = m * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("affine fit needs at least two distinct omega values");
  AffineFit fit;
  fit.slope = (m * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (const auto& r : rows) {
    const double resid = static_cast<double>(r.total_cycles) - (fit.intercept + fit.slope * r.omega);
    fit.max_residual = std::max(fit.max_residual, std::abs(resid));
  }
  return fit;
}

}  // namespace hqcs
