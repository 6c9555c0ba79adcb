#include <gtest/gtest.h>

#include <functional>

#include "hqcs/oracle.hpp"
#include "hqcs/pipesim.hpp"

namespace hqcs {
namespace {

PipeConfig pipe(std::uint32_t omega, std::uint32_t width = 64) {
  PipeConfig c;
  c.sampler = SamplerConfig{17669, omega, width};
  return c;
}

// Stub words steering loop index i to candidate cand(i); the first word feeds
// the highest index.
std::vector<std::uint32_t> steer(const SamplerConfig& cfg, const std::function<std::uint32_t(std::uint32_t)>& cand) {
  std::vector<std::uint32_t> words;
  for (std::uint32_t i = cfg.omega; i-- > 0;) words.push_back(cand(i) - i);
  return words;
}

TEST(Pipeline, ReferenceCycleCounts) {
  EXPECT_EQ(pipeline_cycles(pipe(66)), 121u);
  EXPECT_EQ(pipeline_cycles(pipe(0)), 0u);
  // 24-cycle fill, one issue per cycle, six stages, one flush write
  EXPECT_EQ(pipeline_cycles(pipe(1)), 24u + 6 + 1);
  EXPECT_EQ(pipeline_cycles(pipe(34)), 24u + 33 + 6 + 1);
  EXPECT_EQ(pipeline_cycles(pipe(35)), 24u + 34 + 24 + 6 + 1);
}

TEST(Pipeline, ZeroWeightRunsNoCycles) {
  XofStream s = XofStream::stub({1});
  const auto sim = simulate(pipe(0), s);
  EXPECT_EQ(sim.trace.total_cycles, 0u);
  EXPECT_TRUE(sim.trace.per_cycle.empty());
  EXPECT_TRUE(sim.sample.dense.is_zero());
}

TEST(Pipeline, BitIdenticalToSequentialSampler) {
  for (const std::uint32_t width : {8u, 16u, 32u, 64u}) {
    for (const std::uint32_t omega : {1u, 8u, 66u, 75u}) {
      for (const auto& seed : oracle::seeds(40, omega * 100 + width)) {
        XofStream a = XofStream::standard(seed);
        XofStream b = XofStream::standard(seed);
        const auto sim = simulate(pipe(omega, width), a);
        ASSERT_EQ(sim.sample, sample_new(SamplerConfig{17669, omega, width}, b)) << "omega=" << omega << " m_w=" << width;
      }
    }
  }
}

TEST(Pipeline, TimingIndependentOfData) {
  const PipeConfig cfg = pipe(66);
  XofStream first = XofStream::standard(Seed::zeros());
  const auto ref = simulate(cfg, first).trace;
  ASSERT_EQ(ref.per_cycle.size(), ref.total_cycles);

  std::vector<XofStream> streams;
  for (const auto& seed : oracle::seeds(200, 3)) streams.push_back(XofStream::standard(seed));
  streams.push_back(XofStream::stub(steer(cfg.sampler, [](std::uint32_t) { return 17668u; })));
  streams.push_back(XofStream::stub(steer(cfg.sampler, [](std::uint32_t i) { return i; })));
  for (auto& s : streams) {
    const auto t = simulate(cfg, s).trace;
    ASSERT_EQ(t.total_cycles, ref.total_cycles);
    ASSERT_EQ(t.per_cycle, ref.per_cycle);
    ASSERT_EQ(t.stall_cycles, ref.stall_cycles);
  }
}

TEST(Pipeline, EveryIterationVisitsEveryStageInOrder) {
  const PipeConfig cfg = pipe(66);
  XofStream s = XofStream::standard(Seed::zeros());
  const auto t = simulate(cfg, s).trace;
  for (std::size_t st = 0; st < kStageCount; ++st) {
    std::uint64_t busy = 0;
    for (const auto& row : t.per_cycle) busy += row[st];
    const std::uint64_t expect = 66 + (st == static_cast<std::size_t>(Stage::Write) ? t.epilogue_writes : 0);
    EXPECT_EQ(busy, expect) << "stage " << st;
  }
  // the k-th occupied S1 cycle is followed by the k-th S2 cycle one later, and so on
  for (std::size_t st = 1; st < kStageCount - 1; ++st) {
    for (std::size_t c = 0; c + 1 < t.per_cycle.size(); ++c) {
      ASSERT_EQ(t.per_cycle[c][st - 1], t.per_cycle[c + 1][st]) << "cycle " << c;
    }
  }
  EXPECT_EQ(t.stall_cycles, 2u * 24);
  EXPECT_EQ(t.permutations, 2u);
}

TEST(Pipeline, EpilogueFlushesLowRegisterWords) {
  for (const std::uint32_t width : {8u, 16u, 32u, 64u}) {
    for (const std::uint32_t omega : {1u, 8u, 9u, 66u, 75u}) {
      XofStream s = XofStream::standard(Seed::zeros());
      const auto t = simulate(pipe(omega, width), s).trace;
      EXPECT_EQ(t.epilogue_writes, (omega + width - 1) / width);
    }
  }
}

TEST(Pipeline, ForwardingResolvesBackToBackCollisions) {
  const PipeConfig cfg = pipe(66);
  struct Case {
    const char* name;
    std::function<std::uint32_t(std::uint32_t)> cand;
  };
  const std::vector<Case> cases = {
      {"same high word", [](std::uint32_t) { return 17668u; }},
      {"adjacent high bits", [](std::uint32_t i) { return 17600 + i % 3; }},
      {"low register word", [](std::uint32_t i) { return i < 2 ? i : 2u; }},
      {"crossing into registers", [](std::uint32_t i) { return std::max(i, 63u + i % 2); }},
  };
  for (const auto& c : cases) {
    const auto words = steer(cfg.sampler, c.cand);
    XofStream a = XofStream::stub(words);
    XofStream b = XofStream::stub(words);
    const auto sim = simulate(cfg, a);
    EXPECT_GE(sim.trace.hazards_forwarded, 1u) << c.name;
    EXPECT_EQ(sim.sample, sample_new(cfg.sampler, b)) << c.name;
    EXPECT_EQ(sim.sample.dense.weight(), 66u) << c.name;
  }
}

TEST(Pipeline, WithoutForwardingCollisionsAreMissed) {
  PipeConfig cfg = pipe(66);
  cfg.forwarding = false;
  const auto words = steer(cfg.sampler, [](std::uint32_t) { return 17668u; });
  XofStream a = XofStream::stub(words);
  XofStream b = XofStream::stub(words);
  const auto sim = simulate(cfg, a);
  EXPECT_NE(sim.sample, sample_new(cfg.sampler, b));
  EXPECT_LT(sim.sample.dense.weight(), 66u);
}

TEST(CycleProfile, GrowsWithWeightAndIgnoresSeed) {
  std::vector<PipeConfig> grid;
  for (const std::uint32_t omega : {8u, 16u, 32u, 64u, 75u}) grid.push_back(pipe(omega));
  const auto rows = cycle_profile(grid);
  ASSERT_EQ(rows.size(), grid.size());
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GT(rows[k].total_cycles, rows[k - 1].total_cycles);
  EXPECT_EQ(cycle_profile(grid, Seed::from_hex("ff")), rows);
  // within one permutation's word budget, doubling omega adds exactly omega cycles
  EXPECT_EQ(rows[1].total_cycles - rows[0].total_cycles, 8u);
  EXPECT_EQ(rows[2].total_cycles - rows[1].total_cycles, 16u);
  EXPECT_THROW(cycle_profile({}), std::invalid_argument);
}

TEST(CycleProfile, AffineSlopeBoundedByRefillCost) {
  std::vector<PipeConfig> grid;
  for (std::uint32_t omega = 1; omega <= 75; ++omega) grid.push_back(pipe(omega));
  const auto rows = cycle_profile(grid);
  const auto fit = fit_affine(rows);
  EXPECT_GE(fit.slope, 1.0);
  EXPECT_LE(fit.slope, 1.0 + 24.0 / 34.0);
  EXPECT_THROW(fit_affine(std::vector<CycleProfileRow>{{1, 5}}), std::invalid_argument);
}

TEST(Pipeline, FarFewerCyclesThanSequentialModel) {
  const PipeConfig cfg = pipe(66);
  EXPECT_EQ(original_cycle_estimate(cfg), 2u * 24 + 66 + 3 + 66 * 65 / 2 + 2 * 66);
  EXPECT_GT(original_cycle_estimate(cfg), 10 * pipeline_cycles(cfg));
}

TEST(PipeConfig, Validation) {
  PipeConfig c = pipe(66);
  c.perm_latency = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = pipe(66);
  c.words_per_perm = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(pipe(66, 24).validate(), std::invalid_argument);
  EXPECT_THROW(pipe(76).validate(), std::invalid_argument);
}

}  // namespace
}  // namespace hqcs
