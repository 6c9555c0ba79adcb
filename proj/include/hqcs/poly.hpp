#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hqcs {

/// Storage word of a dense polynomial. Coefficient i lives in word i / 64,
/// bit i % 64.
inline constexpr std::size_t kStorageBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits, std::size_t word_bits = kStorageBits) {
  return (bits + word_bits - 1) / word_bits;
}

/// Element of F2[X]/(X^n - 1) in explicit representation.
///
/// Bits at positions >= n in the top word are always zero; every mutator
/// keeps that invariant.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::size_t n);

  /// Throws std::invalid_argument if the word count is wrong or bits >= n
  /// are set.
  static DensePoly from_words(std::size_t n, std::vector<std::uint64_t> words);
  static DensePoly from_support(std::size_t n, std::span<const std::uint32_t> coords);

  std::size_t degree_bound() const { return n_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t word(std::size_t k) const { return words_[k]; }

  /// Mask of valid bits in storage word k.
  std::uint64_t word_mask(std::size_t k) const;

  bool bit(std::size_t i) const { return (words_[i / kStorageBits] >> (i % kStorageBits)) & 1u; }
  void set_bit(std::size_t i) { words_[i / kStorageBits] |= std::uint64_t{1} << (i % kStorageBits); }

  /// Overwrites storage word k; bits outside the degree bound are dropped.
  void set_word(std::size_t k, std::uint64_t value) { words_[k] = value & word_mask(k); }
  void xor_word(std::size_t k, std::uint64_t value) { words_[k] ^= value & word_mask(k); }

  /// Hamming weight.
  std::size_t weight() const;
  bool is_zero() const;

  /// Sorted exponents of the nonzero coefficients.
  std::vector<std::uint32_t> support() const;

  /// The coefficient vector regrouped into words of `word_bits` bits
  /// (8, 16, 32 or 64), low coefficient in the least significant bit.
  std::vector<std::uint64_t> words_of_width(unsigned word_bits) const;

  /// Lowercase hex, ceil(n/8) bytes, byte k holds coefficients 8k..8k+7
  /// with coefficient 8k in its least significant bit.
  std::string to_hex() const;
  static DensePoly from_hex(std::string_view hex, std::size_t n);

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse polynomial in support representation: one coordinate per nonzero
/// coefficient.
struct SupportPoly {
  std::vector<std::uint32_t> coords;

  std::size_t size() const { return coords.size(); }
  std::vector<std::uint32_t> sorted() const;

  /// Throws std::invalid_argument on a coordinate >= n or a repeated one.
  void validate(std::size_t n) const;

  friend bool operator==(const SupportPoly&, const SupportPoly&) = default;
};

/// Raw byte helpers shared by seeds and serialized tables.
std::string bytes_to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> hex_to_bytes(std::string_view hex);

}  // namespace hqcs
