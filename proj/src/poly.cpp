#include "hqcs/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hqcs {

DensePoly::DensePoly(std::size_t n) : n_(n), words_(words_for_bits(n), 0) {}

std::uint64_t DensePoly::word_mask(std::size_t k) const {
  const std::size_t lo = k * kStorageBits;
  if (lo >= n_) return 0;
  const std::size_t len = std::min(kStorageBits, n_ - lo);
  return len == kStorageBits ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

DensePoly DensePoly::from_words(std::size_t n, std::vector<std::uint64_t> words) {
  DensePoly p(n);
  if (words.size() != p.words_.size()) {
    throw std::invalid_argument("dense polynomial: expected " + std::to_string(p.words_.size()) +
                                " words, got " + std::to_string(words.size()));
  }
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (words[k] & ~p.word_mask(k)) {
      throw std::invalid_argument("dense polynomial: bits set at or above degree bound");
    }
  }
  p.words_ = std::move(words);
  return p;
}

DensePoly DensePoly::from_support(std::size_t n, std::span<const std::uint32_t> coords) {
  DensePoly p(n);
  for (const auto c : coords) {
    if (c >= n) throw std::invalid_argument("support coordinate out of range: " + std::to_string(c));
    if (p.bit(c)) throw std::invalid_argument("duplicate support coordinate: " + std::to_string(c));
    p.set_bit(c);
  }
  return p;
}

std::size_t DensePoly::weight() const {
  std::size_t w = 0;
  for (const auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool DensePoly::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

std::vector<std::uint32_t> DensePoly::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t x = words_[k];
    while (x) {
      out.push_back(static_cast<std::uint32_t>(k * kStorageBits + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<std::uint64_t> DensePoly::words_of_width(unsigned word_bits) const {
  if (word_bits != 8 && word_bits != 16 && word_bits != 32 && word_bits != 64) {
    throw std::invalid_argument("word width must be 8, 16, 32 or 64");
  }
  const std::size_t per = kStorageBits / word_bits;
  const std::uint64_t mask = word_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits) - 1;
  std::vector<std::uint64_t> out(words_for_bits(n_, word_bits));
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (words_[j / per] >> ((j % per) * word_bits)) & mask;
  }
  return out;
}

std::string DensePoly::to_hex() const {
  std::vector<std::uint8_t> bytes(words_for_bits(n_, 8));
  for (std::size_t b = 0; b < bytes.size(); ++b) {
    bytes[b] = static_cast<std::uint8_t>(words_[b / 8] >> ((b % 8) * 8));
  }
  return bytes_to_hex(bytes);
}

DensePoly DensePoly::from_hex(std::string_view hex, std::size_t n) {
  const auto bytes = hex_to_bytes(hex);
  if (bytes.size() != words_for_bits(n, 8)) {
    throw std::invalid_argument("dense polynomial hex: expected " + std::to_string(2 * words_for_bits(n, 8)) +
                                " hex digits");
  }
  std::vector<std::uint64_t> words(words_for_bits(n), 0);
  for (std::size_t b = 0; b < bytes.size(); ++b) {
    words[b / 8] |= std::uint64_t{bytes[b]} << ((b % 8) * 8);
  }
  return from_words(n, std::move(words));
}

std::vector<std::uint32_t> SupportPoly::sorted() const {
  auto out = coords;
  std::sort(out.begin(), out.end());
  return out;
}

void SupportPoly::validate(std::size_t n) const {
  const auto s = sorted();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= n) throw std::invalid_argument("support coordinate out of range: " + std::to_string(s[k]));
    if (k > 0 && s[k] == s[k - 1]) {
      throw std::invalid_argument("duplicate support coordinate: " + std::to_string(s[k]));
    }
  }
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (const auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::vector<std::uint8_t> hex_to_bytes(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace hqcs
