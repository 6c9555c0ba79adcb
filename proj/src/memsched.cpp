#include "hqcs/memsched.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hqcs/ring.hpp"

namespace hqcs {

std::string_view access_op_name(AccessOp op) {
  switch (op) {
    case AccessOp::Read:
      return "read";
    case AccessOp::Write:
      return "write";
    case AccessOp::ModifyXor:
      return "modify-xor";
  }
  return "?";
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::X:
      return "x";
    case Phase::Y:
      return "y";
    case Phase::H:
      return "h";
    case Phase::Product:
      return "product";
    case Phase::Z:
      return "z";
  }
  return "?";
}

Arena::Arena(std::string id, std::size_t words, unsigned word_bits, bool xor_modify)
    : id_(std::move(id)), word_bits_(word_bits), xor_modify_(xor_modify), data_(words, 0) {}

void Arena::check(std::size_t word) const {
  if (word >= data_.size()) {
    throw std::out_of_range(id_ + ": access to word " + std::to_string(word) + " beyond capacity");
  }
}

std::uint64_t Arena::read(std::size_t word, Phase phase) {
  check(word);
  log_.push_back({AccessOp::Read, static_cast<std::uint32_t>(word), phase});
  return data_[word];
}

void Arena::write(std::size_t word, std::uint64_t value, Phase phase) {
  check(word);
  log_.push_back({AccessOp::Write, static_cast<std::uint32_t>(word), phase});
  data_[word] = value;
}

void Arena::modify_xor(std::size_t word, std::uint64_t value, Phase phase) {
  if (!xor_modify_) throw std::logic_error(id_ + ": arena has no XOR-modify port");
  check(word);
  log_.push_back({AccessOp::ModifyXor, static_cast<std::uint32_t>(word), phase});
  data_[word] ^= value;
}

std::size_t Arena::count(AccessOp op) const {
  return static_cast<std::size_t>(
      std::count_if(log_.begin(), log_.end(), [op](const Access& a) { return a.op == op; }));
}

std::size_t KeygenRun::total_capacity_bits() const {
  std::size_t t = 0;
  for (const auto& a : arenas) t += a.capacity_bits();
  return t;
}

std::size_t KeygenRun::max_capacity_bits() const {
  std::size_t m = 0;
  for (const auto& a : arenas) m = std::max(m, a.capacity_bits());
  return m;
}

namespace {

void require_64(const SamplerConfig& cfg) {
  cfg.validate();
  if (cfg.word_width != 64) throw std::invalid_argument("keygen schedules model 64-bit memory words only");
}

unsigned coord_bits(std::uint32_t n) { return static_cast<unsigned>(std::bit_width(n - 1)); }

// Word-addressed views binding an arena to one dataflow phase.
struct ArenaBits {
  Arena* a;
  Phase phase;
  unsigned word_bits() const { return a->word_bits(); }
  std::uint64_t read(std::size_t w) { return a->read(w, phase); }
  void write(std::size_t w, std::uint64_t v) { a->write(w, v, phase); }
};

struct ArenaXorSink {
  Arena* a;
  Phase phase;
  void modify_xor(std::size_t w, std::uint64_t v) { a->modify_xor(w, v, phase); }
};

// Accumulation without an XOR-modify port: read, combine, write back.
struct ArenaRmwSink {
  Arena* a;
  Phase phase;
  void modify_xor(std::size_t w, std::uint64_t v) { a->write(w, a->read(w, phase) ^ v, phase); }
};

DensePoly poly_from_arena(const Arena& a, std::uint32_t n) { return DensePoly::from_words(n, a.snapshot()); }

void sample_into_arena(const SamplerConfig& cfg, XofStream& stream, Arena& dense, Phase phase, Arena* support) {
  const ReductionFactors factors(cfg.n, cfg.omega);
  ArenaBits mem{&dense, phase};
  sample_new_into(cfg, factors, stream, mem, [&](std::uint32_t i, std::uint32_t c) {
    if (support) support->write(i, c, phase);
  });
}

}  // namespace

KeygenRun keygen_joint(const SamplerConfig& cfg, const Seed& seed) {
  require_64(cfg);
  const std::size_t dense_words = words_for_bits(cfg.n);
  std::vector<Arena> arenas;
  arenas.emplace_back("RAM0", dense_words, 64, true);
  arenas.emplace_back("RAM1", dense_words, 64, false);
  arenas.emplace_back("RAM2", cfg.omega, coord_bits(cfg.n), false);
  Arena& ram0 = arenas[0];
  Arena& ram1 = arenas[1];
  Arena& ram2 = arenas[2];

  XofStream stream = XofStream::standard(seed);
  KeygenArtifacts art;

  // 1. x, explicit, straight into the result arena
  sample_into_arena(cfg, stream, ram0, Phase::X, nullptr);
  art.x = poly_from_arena(ram0, cfg.n);

  // 2. y, explicit in RAM1 for the uniqueness check, support into RAM2
  sample_into_arena(cfg, stream, ram1, Phase::Y, &ram2);
  art.y_dense = poly_from_arena(ram1, cfg.n);
  art.y_support.coords.resize(cfg.omega);
  for (std::uint32_t i = 0; i < cfg.omega; ++i) art.y_support.coords[i] = static_cast<std::uint32_t>(ram2.peek(i));

  // 3. h overwrites y's explicit form
  art.h = sample_dense_uniform(cfg.n, stream);
  for (std::size_t k = 0; k < dense_words; ++k) ram1.write(k, art.h.word(k), Phase::H);

  // 4. z = h*y + x, accumulated over the preloaded x
  ArenaXorSink sink{&ram0, Phase::Z};
  ArenaBits h_reader{&ram1, Phase::Z};
  mul_sparse_accumulate(sink, h_reader, cfg.n, cfg.omega,
                        [&](std::size_t j) { return static_cast<std::uint32_t>(ram2.read(j, Phase::Z)); });
  art.z = poly_from_arena(ram0, cfg.n);

  return {std::move(art), std::move(arenas)};
}

KeygenRun keygen_baseline(const SamplerConfig& cfg, const Seed& seed) {
  require_64(cfg);
  const std::size_t n = cfg.n;
  const std::size_t dense_words = words_for_bits(n);
  const std::size_t product_words = words_for_bits(2 * n);
  std::vector<Arena> arenas;
  arenas.emplace_back("RAM0", dense_words, 64, false);
  arenas.emplace_back("RAM1", dense_words, 64, false);
  arenas.emplace_back("RAM2", cfg.omega, coord_bits(cfg.n), false);
  arenas.emplace_back("RAM3", product_words, 64, false);
  Arena& ram0 = arenas[0];
  Arena& ram1 = arenas[1];
  Arena& ram2 = arenas[2];
  Arena& ram3 = arenas[3];

  XofStream stream = XofStream::standard(seed);
  KeygenArtifacts art;

  // x and y are sampled in support form; the sampler needs no explicit arena
  const SampleResult x = sample_original_reversed(cfg, stream);
  art.x = x.dense;
  for (std::size_t k = 0; k < dense_words; ++k) ram1.write(k, art.x.word(k), Phase::X);

  const SampleResult y = sample_original_reversed(cfg, stream);
  art.y_support = y.support;
  art.y_dense = y.dense;
  for (std::uint32_t i = 0; i < cfg.omega; ++i) ram2.write(i, y.support.coords[i], Phase::Y);

  art.h = sample_dense_uniform(cfg.n, stream);
  for (std::size_t k = 0; k < dense_words; ++k) ram0.write(k, art.h.word(k), Phase::H);

  // z' = h*y without reduction: word k of h lands at bit 64k + c of RAM3
  ArenaRmwSink product{&ram3, Phase::Product};
  for (std::uint32_t j = 0; j < cfg.omega; ++j) {
    const auto c = static_cast<std::uint32_t>(ram2.read(j, Phase::Product));
    for (std::size_t k = 0; k < dense_words; ++k) {
      const std::uint64_t hw = ram0.read(k, Phase::Product);
      ring_detail::xor_run(product, k * kStorageBits + c, hw, std::min(kStorageBits, n - k * kStorageBits));
    }
  }

  // z = (z' mod X^n - 1) + x: fold bits [n, 2n) onto [0, n)
  auto product_bits = [&](std::size_t offset) {
    const std::size_t q = offset / kStorageBits;
    const unsigned sh = offset % kStorageBits;
    std::uint64_t v = ram3.read(q, Phase::Z) >> sh;
    if (sh != 0 && q + 1 < product_words) v |= ram3.read(q + 1, Phase::Z) << (kStorageBits - sh);
    return v;
  };
  for (std::size_t k = 0; k < dense_words; ++k) {
    const std::size_t len = std::min(kStorageBits, n - k * kStorageBits);
    const std::uint64_t mask = ring_detail::low_mask(len);
    const std::uint64_t z = (product_bits(k * kStorageBits) ^ product_bits(n + k * kStorageBits) ^
                             ram1.read(k, Phase::Z)) &
                            mask;
    ram1.write(k, z, Phase::Z);
  }
  art.z = poly_from_arena(ram1, cfg.n);

  return {std::move(art), std::move(arenas)};
}

}  // namespace hqcs
