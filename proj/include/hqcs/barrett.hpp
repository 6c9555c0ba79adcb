#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hqcs {

/// floor(2^32 / m) for m >= 2.
constexpr std::uint32_t barrett_factor(std::uint32_t m) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / m);
}

/// Operation tally of the instrumented reduction.
struct BarrettOpCounts {
  std::uint64_t multiply_high = 0;
  std::uint64_t multiply_low = 0;
  std::uint64_t subtract = 0;
  std::uint64_t masked_subtract = 0;

  friend bool operator==(const BarrettOpCounts&, const BarrettOpCounts&) = default;
};

/// w mod m via X = W - M * ((W * R) >> 32) followed by one conditional
/// subtraction, done as a mask select. Requires r == barrett_factor(m),
/// m >= 2. The quotient estimate is at most one short, so a single
/// correction suffices.
constexpr std::uint32_t barrett_reduce(std::uint32_t w, std::uint32_t m, std::uint32_t r) {
  const auto q = static_cast<std::uint32_t>((std::uint64_t{w} * r) >> 32);
  const std::uint32_t x = w - m * q;
  const std::uint32_t d = x - m;
  // all-ones when x >= m
  const std::uint32_t keep = static_cast<std::uint32_t>(-static_cast<std::int32_t>(x >= m));
  return (d & keep) | (x & ~keep);
}

std::uint32_t barrett_reduce(std::uint32_t w, std::uint32_t m, std::uint32_t r, BarrettOpCounts& ops);

/// Reduction factors for the moduli n - i, i in [0, omega), stored as one
/// base factor plus one correction bit per index.
///
/// Walking i from omega-1 down to 0 the modulus grows by one per step and
/// the factor shrinks by 13 or 14:
///
///   factor(i - 1) = factor(i) - 14 + correction[i]
///
/// with factor(omega - 1) = r_base = floor(2^32 / (n - omega + 1)).
/// correction[0] has no successor and is always zero.
class BarrettTable {
 public:
  static constexpr unsigned kBaseBits = 18;
  static constexpr std::uint32_t kStep = 14;

  /// Requires n > omega >= 1 and n < 2^18. Throws std::invalid_argument
  /// otherwise, and std::domain_error if some adjacent factor difference is
  /// not 13 or 14 (the compression does not apply) or r_base does not fit in
  /// 18 bits.
  static BarrettTable build(std::uint32_t n, std::uint32_t omega);

  std::uint32_t n() const { return n_; }
  std::uint32_t omega() const { return omega_; }
  std::uint32_t r_base() const { return r_base_; }
  const std::vector<std::uint8_t>& correction() const { return correction_; }

  /// Factor for modulus n - i. Throws std::out_of_range for i >= omega.
  std::uint32_t factor_for(std::uint32_t i) const;

  /// omega + 18.
  std::size_t payload_bits() const { return omega_ + kBaseBits; }
  /// 18 * omega, the size of a plain table.
  std::size_t uncompressed_bits() const { return std::size_t{kBaseBits} * omega_; }

  /// Bit string of r_base (18 bits, least significant first) followed by
  /// correction[0..omega), packed little-endian into bytes.
  std::string to_hex() const;

  /// Streams factors for i = omega-1, omega-2, ..., 0 with one add and one
  /// subtract per step.
  class Cursor {
   public:
    explicit Cursor(const BarrettTable& table);
    std::uint32_t index() const { return i_; }
    std::uint32_t factor() const { return r_; }
    /// Moves to index i - 1. No-op past index 0.
    void step();

   private:
    const BarrettTable* table_;
    std::uint32_t i_;
    std::uint32_t r_;
  };
  Cursor cursor() const { return Cursor(*this); }

 private:
  BarrettTable(std::uint32_t n, std::uint32_t omega, std::uint32_t r_base, std::vector<std::uint8_t> corr)
      : n_(n), omega_(omega), r_base_(r_base), correction_(std::move(corr)) {}

  std::uint32_t n_;
  std::uint32_t omega_;
  std::uint32_t r_base_;
  std::vector<std::uint8_t> correction_;
};

/// Factor source for the sampler: the compressed table where its premise
/// holds, otherwise an explicit table of floor(2^32 / (n - i)).
class ReductionFactors {
 public:
  ReductionFactors(std::uint32_t n, std::uint32_t omega);

  bool compressed() const { return std::holds_alternative<BarrettTable>(source_); }
  std::uint32_t factor_for(std::uint32_t i) const;

  /// Descending walk i = omega-1 .. 0.
  class Cursor {
   public:
    explicit Cursor(const ReductionFactors& f);
    std::uint32_t factor() const;
    void step();

   private:
    const ReductionFactors* f_;
    std::uint32_t i_;
    std::optional<BarrettTable::Cursor> table_cursor_;
  };
  Cursor cursor() const { return Cursor(*this); }

 private:
  std::uint32_t n_;
  std::uint32_t omega_;
  std::variant<BarrettTable, std::vector<std::uint32_t>> source_;
};

}  // namespace hqcs
