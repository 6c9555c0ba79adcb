#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hqcs/barrett.hpp"
#include "hqcs/poly.hpp"
#include "hqcs/xof.hpp"

namespace hqcs {

inline constexpr std::uint32_t kHqc128N = 17669;
inline constexpr std::uint32_t kHqc128Omega = 66;
inline constexpr std::uint32_t kHqc128OmegaR = 75;
inline constexpr std::uint32_t kMaxOmega = 75;
inline constexpr std::uint32_t kMaxN = 1u << 18;

struct SamplerConfig {
  std::uint32_t n = kHqc128N;
  std::uint32_t omega = kHqc128Omega;
  /// Memory word width m_w in bits: 8, 16, 32 or 64.
  std::uint32_t word_width = 64;

  /// Throws std::invalid_argument unless omega <= 75, omega < n < 2^18 and
  /// word_width is a supported width. omega == 0 is accepted.
  void validate() const;
};

struct SampleCounters {
  std::uint64_t uniqueness_comparisons = 0;
  std::uint64_t words_consumed = 0;
  std::uint64_t duplicate_resolutions = 0;

  friend bool operator==(const SampleCounters&, const SampleCounters&) = default;
};

/// dense == transform(support) and weight(dense) == omega.
struct SampleResult {
  DensePoly dense;
  /// coords[i] is the resolved coordinate for loop index i.
  SupportPoly support;
  SampleCounters counters;

  friend bool operator==(const SampleResult&, const SampleResult&) = default;
};

enum class SamplerAlgorithm { Original, OriginalReversed, New };

/// "orig", "orig-rev", "new".
SamplerAlgorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(SamplerAlgorithm alg);

/// Operation kinds recorded by an instrumented sample_new run.
enum class SamplerOp : std::uint8_t { Draw, Reduce, ReadBit, WriteBit };

/// Support-form sampler with a forward mod loop and a backward O(omega^2)
/// uniqueness loop. Words are consumed in natural order.
SampleResult sample_original(const SamplerConfig& cfg, XofStream& stream);

/// As sample_original, but index i is fed by word omega-1-i.
SampleResult sample_original_reversed(const SamplerConfig& cfg, XofStream& stream);

/// Single backward loop; uniqueness decided by one bit of the dense
/// accumulator. If `ops` is given, every operation kind is appended in
/// execution order.
SampleResult sample_new(const SamplerConfig& cfg, XofStream& stream, std::vector<SamplerOp>* ops = nullptr);

SampleResult sample(SamplerAlgorithm alg, const SamplerConfig& cfg, XofStream& stream);

/// Throws std::invalid_argument on a coordinate >= n or a duplicate.
DensePoly transform(const SupportPoly& support, const SamplerConfig& cfg);

/// Uniformly filled dense polynomial: ceil(n/64) squeeze blocks, top word
/// truncated to the degree bound.
DensePoly sample_dense_uniform(std::uint32_t n, XofStream& stream);

namespace detail {
constexpr std::uint64_t select_mask(std::uint64_t bit) { return std::uint64_t{0} - bit; }
}  // namespace detail

/// Core loop of sample_new over an arbitrary word-addressed bit memory.
///
/// `Memory` provides `unsigned word_bits() const`,
/// `std::uint64_t read(std::size_t word)` and
/// `void write(std::size_t word, std::uint64_t value)`; it must start zeroed.
/// `on_coordinate(i, coord)` receives each resolved coordinate as produced.
///
/// Per iteration the memory sees exactly: a read of the word holding the
/// candidate, a read of the word holding bit i, and one write to a
/// mask-selected word. The control flow does not depend on the data.
template <class Memory, class OnCoordinate>
SampleCounters sample_new_into(const SamplerConfig& cfg, const ReductionFactors& factors, XofStream& stream,
                               Memory& mem, OnCoordinate&& on_coordinate, std::vector<SamplerOp>* ops = nullptr) {
  SampleCounters counters;
  const unsigned wb = mem.word_bits();
  auto note = [ops](SamplerOp op) {
    if (ops) ops->push_back(op);
  };

  auto cursor = factors.cursor();
  for (std::uint32_t k = 0; k < cfg.omega; ++k, cursor.step()) {
    const std::uint32_t i = cfg.omega - 1 - k;
    const std::uint32_t word = stream.next_word();
    ++counters.words_consumed;
    note(SamplerOp::Draw);

    const std::uint32_t cand = i + barrett_reduce(word, cfg.n - i, cursor.factor());
    note(SamplerOp::Reduce);

    const std::size_t cand_addr = cand / wb;
    const std::uint64_t cand_word = mem.read(cand_addr);
    const std::uint64_t dup = (cand_word >> (cand % wb)) & 1u;
    ++counters.uniqueness_comparisons;
    note(SamplerOp::ReadBit);

    const std::size_t low_addr = i / wb;
    const std::uint64_t low_word = mem.read(low_addr);
    const std::uint64_t m = detail::select_mask(dup);
    const std::size_t target_addr = static_cast<std::size_t>((low_addr & m) | (cand_addr & ~m));
    const std::uint64_t target_word = ((low_word | (std::uint64_t{1} << (i % wb))) & m) |
                                      ((cand_word | (std::uint64_t{1} << (cand % wb))) & ~m);
    mem.write(target_addr, target_word);
    note(SamplerOp::WriteBit);

    counters.duplicate_resolutions += dup;
    const auto resolved = static_cast<std::uint32_t>((i & m) | (cand & ~m));
    on_coordinate(i, resolved);
  }
  return counters;
}

}  // namespace hqcs
