#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>

#include "hqcs/poly.hpp"

namespace hqcs {

// Arithmetic in F2[X]/(X^n - 1). The degree bound n travels with each
// DensePoly.

/// Cyclic shift: coefficient i moves to (i + c) mod n. Throws
/// std::invalid_argument for c >= n.
DensePoly rotl_poly(const DensePoly& h, std::uint32_t c);

/// Wordwise XOR. Throws std::invalid_argument on mismatched degree bounds.
DensePoly add_poly(const DensePoly& a, const DensePoly& b);

/// acc + h * y with the reduction folded into the accumulation. Throws
/// std::invalid_argument on mismatched degree bounds or a coordinate >= n.
DensePoly mul_sparse_acc(const DensePoly& h, const SupportPoly& y, const DensePoly& acc);

namespace ring_detail {

constexpr std::uint64_t low_mask(std::size_t len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

/// XORs the low `len` bits of `value` into the accumulator at bit `offset`.
/// Touches one word, or two when the run crosses a word boundary.
template <class Acc>
void xor_run(Acc& acc, std::size_t offset, std::uint64_t value, std::size_t len) {
  if (len == 0) return;
  value &= low_mask(len);
  const std::size_t q = offset / kStorageBits;
  const unsigned sh = offset % kStorageBits;
  acc.modify_xor(q, value << sh);
  if (sh != 0 && sh + len > kStorageBits) acc.modify_xor(q + 1, value >> (kStorageBits - sh));
}

}  // namespace ring_detail

/// Windowed schoolbook kernel for one (dense word, coordinate) pair: word k
/// of h (bits 64k .. 64k+len-1) lands at (64k + c) mod n, split in two runs
/// where it wraps past n. Nothing of degree >= n is ever formed.
template <class Acc>
void accumulate_word_times_monomial(Acc& acc, std::size_t n, std::size_t k, std::uint64_t h_word,
                                    std::uint32_t c) {
  const std::size_t base = k * kStorageBits;
  const std::size_t len = std::min(kStorageBits, n - base);
  std::size_t start = base + c;
  if (start >= n) start -= n;
  const std::size_t first = std::min(len, n - start);
  ring_detail::xor_run(acc, start, h_word, first);
  if (first < len) ring_detail::xor_run(acc, 0, h_word >> first, len - first);
}

/// h * y accumulated into `acc`, coordinate by coordinate, word by word.
/// `HReader` provides `std::uint64_t read(std::size_t word)`; `coord(j)`
/// yields the j-th coordinate of y.
template <class Acc, class HReader, class CoordReader>
void mul_sparse_accumulate(Acc& acc, HReader& h, std::size_t n, std::size_t y_size, CoordReader&& coord) {
  const std::size_t words = words_for_bits(n);
  for (std::size_t j = 0; j < y_size; ++j) {
    const std::uint32_t c = coord(j);
    for (std::size_t k = 0; k < words; ++k) accumulate_word_times_monomial(acc, n, k, h.read(k), c);
  }
}

}  // namespace hqcs
