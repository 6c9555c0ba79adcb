#include "hqcs/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hqcs::oracle {

DensePoly convolve_then_reduce(const DensePoly& h, const std::vector<std::uint32_t>& y, const DensePoly& acc) {
  const std::size_t n = h.degree_bound();
  std::vector<std::uint8_t> wide(2 * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!h.bit(a)) continue;
    for (const auto c : y) wide[a + c] ^= 1;
  }
  DensePoly out(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (wide[e] ^ wide[e + n] ^ static_cast<std::uint8_t>(acc.bit(e))) out.set_bit(e);
  }
  return out;
}

std::vector<Seed> seeds(std::size_t count, std::uint64_t salt, std::size_t len) {
  std::mt19937_64 rng(0x5eed0000ULL ^ salt);
  std::vector<Seed> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::uint8_t> b(len);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    out.emplace_back(std::move(b));
  }
  return out;
}

DensePoly random_dense(std::size_t n, std::mt19937_64& rng) {
  DensePoly p(n);
  for (std::size_t k = 0; k < p.word_count(); ++k) p.set_word(k, rng());
  return p;
}

std::vector<std::uint32_t> random_support(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  // partial Fisher-Yates
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, n - 1);
    std::swap(all[k], all[pick(rng)]);
  }
  all.resize(count);
  return all;
}

}  // namespace hqcs::oracle
