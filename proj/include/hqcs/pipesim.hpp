#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hqcs/sampler.hpp"
#include "hqcs/xof.hpp"

namespace hqcs {

/// Six-stage sampling pipeline. One iteration (one loop index) moves
/// through the stages in order, one stage per cycle.
enum class Stage : std::uint8_t {
  Generate,  // S1: take a word from the squeeze buffer
  Barrett1,  // S2-S4: multiply-high, multiply-low, corrected subtract
  Barrett2,
  Barrett3,
  Check,  // S5: read the candidate's word, uniqueness test
  Write,  // S6: unconditional write; also used by epilogue flushes
};
inline constexpr std::size_t kStageCount = 6;

struct PipeConfig {
  SamplerConfig sampler;
  /// Cycles S1 stalls while the permutation refills the word buffer.
  std::uint32_t perm_latency = 24;
  /// 32-bit words available per permutation.
  std::uint32_t words_per_perm = 34;
  /// Register forwarding of the word written in the same cycle. Only
  /// switched off to demonstrate the hazard.
  bool forwarding = true;

  void validate() const;
};

using StageOccupancy = std::array<bool, kStageCount>;

struct PipelineTrace {
  std::uint64_t total_cycles = 0;
  std::vector<StageOccupancy> per_cycle;
  std::uint64_t hazards_forwarded = 0;
  std::uint64_t epilogue_writes = 0;
  std::uint64_t stall_cycles = 0;
  std::uint64_t permutations = 0;
};

struct Simulation {
  SampleResult sample;
  PipelineTrace trace;
};

/// Cycle-level run of the pipelined sampler over `stream`. The sample is
/// bit-identical to sample_new on the same stream; the cycle count and
/// stage occupancy depend only on (omega, m_w, perm_latency,
/// words_per_perm).
///
/// Memory model: the polynomial lives in ceil(n/m_w) memory words. Words
/// holding coordinates [0, omega) are mirrored in a local register file,
/// because duplicate resolutions (v[i] = 1, i < omega) land only there; the
/// register file is flushed to memory in an epilogue of ceil(omega/m_w)
/// write cycles. A read in S5 that coincides with the S6 write of the
/// previous iteration takes the written value from the forwarding register.
/// An omega == 0 run takes 0 cycles.
Simulation simulate(const PipeConfig& cfg, XofStream& stream);

/// Cycle count from the schedule alone (no data).
std::uint64_t pipeline_cycles(const PipeConfig& cfg);

/// Sequential cost model of the support-form sampler on the same XOF:
/// permutation stalls, omega pipelined mod-loop issues plus a 3-cycle
/// Barrett drain, omega(omega-1)/2 single-cycle compares, and a 2-cycle
/// read/write per coordinate for the final transform. Comparison only.
std::uint64_t original_cycle_estimate(const PipeConfig& cfg);

struct CycleProfileRow {
  std::uint32_t omega;
  std::uint64_t total_cycles;

  friend bool operator==(const CycleProfileRow&, const CycleProfileRow&) = default;
};

/// Simulates each configuration on a standard stream over `seed`. Throws
/// std::invalid_argument for an empty grid.
std::vector<CycleProfileRow> cycle_profile(std::span<const PipeConfig> grid, const Seed& seed = Seed::zeros());

/// Least-squares cycles(omega) = intercept + slope * omega.
struct AffineFit {
  double intercept = 0;
  double slope = 0;
  double max_residual = 0;
};
AffineFit fit_affine(std::span<const CycleProfileRow> rows);

}  // namespace hqcs
