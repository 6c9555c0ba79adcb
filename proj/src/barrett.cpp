#include "hqcs/barrett.hpp"

#include <stdexcept>

#include "hqcs/poly.hpp"

namespace hqcs {

std::uint32_t barrett_reduce(std::uint32_t w, std::uint32_t m, std::uint32_t r, BarrettOpCounts& ops) {
  const std::uint64_t prod = std::uint64_t{w} * r;
  ++ops.multiply_high;
  const auto q = static_cast<std::uint32_t>(prod >> 32);
  const std::uint32_t mq = m * q;
  ++ops.multiply_low;
  const std::uint32_t x = w - mq;
  ++ops.subtract;
  const std::uint32_t keep = static_cast<std::uint32_t>(-static_cast<std::int32_t>(x >= m));
  const std::uint32_t out = ((x - m) & keep) | (x & ~keep);
  ++ops.masked_subtract;
  return out;
}

BarrettTable BarrettTable::build(std::uint32_t n, std::uint32_t omega) {
  if (omega < 1 || n <= omega) throw std::invalid_argument("barrett table: need n > omega >= 1");
  if (n >= (1u << kBaseBits)) throw std::invalid_argument("barrett table: n must be below 2^18");

  const std::uint32_t r_base = barrett_factor(n - omega + 1);
  if (r_base >= (1u << kBaseBits)) {
    throw std::domain_error("barrett table: base factor " + std::to_string(r_base) + " exceeds 18 bits");
  }

  std::vector<std::uint8_t> corr(omega, 0);
  for (std::uint32_t i = 1; i < omega; ++i) {
    const std::uint32_t hi = barrett_factor(n - i);      // modulus n - i
    const std::uint32_t lo = barrett_factor(n - i + 1);  // modulus n - (i - 1)
    const std::uint32_t diff = hi - lo;
    if (diff != kStep && diff != kStep - 1) {
      throw std::domain_error("barrett table: factor step " + std::to_string(diff) + " between moduli " +
                              std::to_string(n - i) + " and " + std::to_string(n - i + 1) +
                              " is outside {13, 14}");
    }
    corr[i] = static_cast<std::uint8_t>(kStep - diff);
  }

  BarrettTable table(n, omega, r_base, std::move(corr));
  for (auto c = table.cursor();; c.step()) {
    if (c.factor() != barrett_factor(n - c.index())) {
      throw std::logic_error("barrett table: reconstruction mismatch at index " + std::to_string(c.index()));
    }
    if (c.index() == 0) break;
  }
  return table;
}

std::uint32_t BarrettTable::factor_for(std::uint32_t i) const {
  if (i >= omega_) throw std::out_of_range("barrett table: index " + std::to_string(i) + " >= omega");
  auto c = cursor();
  while (c.index() > i) c.step();
  return c.factor();
}

std::string BarrettTable::to_hex() const {
  std::vector<std::uint8_t> bytes(words_for_bits(payload_bits(), 8), 0);
  auto put = [&](std::size_t pos, unsigned bit) {
    bytes[pos / 8] |= static_cast<std::uint8_t>((bit & 1u) << (pos % 8));
  };
  for (unsigned b = 0; b < kBaseBits; ++b) put(b, (r_base_ >> b) & 1u);
  for (std::size_t i = 0; i < correction_.size(); ++i) put(kBaseBits + i, correction_[i]);
  return bytes_to_hex(bytes);
}

BarrettTable::Cursor::Cursor(const BarrettTable& table)
    : table_(&table), i_(table.omega_ - 1), r_(table.r_base_) {}

void BarrettTable::Cursor::step() {
  if (i_ == 0) return;
  r_ = r_ - kStep + table_->correction_[i_];
  --i_;
}

ReductionFactors::ReductionFactors(std::uint32_t n, std::uint32_t omega)
    : n_(n), omega_(omega), source_(std::vector<std::uint32_t>{}) {
  if (omega >= n) throw std::invalid_argument("reduction factors: need n > omega");
  if (omega >= 1) {
    try {
      source_ = BarrettTable::build(n, omega);
      return;
    } catch (const std::exception&) {
      // outside the compressed table's premise; fall back to the direct table
    }
  }
  std::vector<std::uint32_t> direct(omega);
  for (std::uint32_t i = 0; i < omega; ++i) direct[i] = barrett_factor(n - i);
  source_ = std::move(direct);
}

std::uint32_t ReductionFactors::factor_for(std::uint32_t i) const {
  if (const auto* t = std::get_if<BarrettTable>(&source_)) return t->factor_for(i);
  return std::get<std::vector<std::uint32_t>>(source_).at(i);
}

ReductionFactors::Cursor::Cursor(const ReductionFactors& f) : f_(&f), i_(f.omega_ == 0 ? 0 : f.omega_ - 1) {
  if (const auto* t = std::get_if<BarrettTable>(&f.source_)) table_cursor_.emplace(t->cursor());
}

std::uint32_t ReductionFactors::Cursor::factor() const {
  if (table_cursor_) return table_cursor_->factor();
  return std::get<std::vector<std::uint32_t>>(f_->source_)[i_];
}

void ReductionFactors::Cursor::step() {
  if (table_cursor_) table_cursor_->step();
  if (i_ > 0) --i_;
}

}  // namespace hqcs
