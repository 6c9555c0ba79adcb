#include "hqcs/ring.hpp"

#include <stdexcept>

namespace hqcs {

namespace {

struct PolyAcc {
  DensePoly* p;
  void modify_xor(std::size_t k, std::uint64_t v) { p->xor_word(k, v); }
};

struct PolyReader {
  const DensePoly* p;
  std::uint64_t read(std::size_t k) const { return p->word(k); }
};

void require_same_bound(const DensePoly& a, const DensePoly& b) {
  if (a.degree_bound() != b.degree_bound()) {
    throw std::invalid_argument("ring operands have different degree bounds");
  }
}

}  // namespace

DensePoly rotl_poly(const DensePoly& h, std::uint32_t c) {
  const std::size_t n = h.degree_bound();
  if (c >= n) throw std::invalid_argument("rotation amount must be below n");
  DensePoly out(n);
  PolyAcc acc{&out};
  for (std::size_t k = 0; k < h.word_count(); ++k) accumulate_word_times_monomial(acc, n, k, h.word(k), c);
  return out;
}

DensePoly add_poly(const DensePoly& a, const DensePoly& b) {
  require_same_bound(a, b);
  DensePoly out = a;
  for (std::size_t k = 0; k < b.word_count(); ++k) out.xor_word(k, b.word(k));
  return out;
}

DensePoly mul_sparse_acc(const DensePoly& h, const SupportPoly& y, const DensePoly& acc) {
  require_same_bound(h, acc);
  const std::size_t n = h.degree_bound();
  for (const auto c : y.coords) {
    if (c >= n) throw std::invalid_argument("support coordinate out of range: " + std::to_string(c));
  }
  DensePoly out = acc;
  PolyAcc sink{&out};
  PolyReader reader{&h};
  mul_sparse_accumulate(sink, reader, n, y.size(), [&](std::size_t j) { return y.coords[j]; });
  return out;
}

}  // namespace hqcs
