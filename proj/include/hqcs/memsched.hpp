#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hqcs/poly.hpp"
#include "hqcs/sampler.hpp"
#include "hqcs/xof.hpp"

namespace hqcs {

enum class AccessOp : std::uint8_t { Read, Write, ModifyXor };

/// Dataflow step an access belongs to.
enum class Phase : std::uint8_t { X, Y, H, Product, Z };

std::string_view access_op_name(AccessOp op);
std::string_view phase_name(Phase phase);

struct Access {
  AccessOp op;
  std::uint32_t word;
  Phase phase;

  friend bool operator==(const Access&, const Access&) = default;
};

/// Modeled block memory: fixed word count and width, an access log, and an
/// optional XOR-modify port. Out-of-range accesses throw std::out_of_range;
/// modify_xor on an arena without the port throws std::logic_error.
class Arena {
 public:
  Arena(std::string id, std::size_t words, unsigned word_bits, bool xor_modify);

  const std::string& id() const { return id_; }
  std::size_t words() const { return data_.size(); }
  unsigned word_bits() const { return word_bits_; }
  std::size_t capacity_bits() const { return data_.size() * word_bits_; }
  bool has_xor_modify() const { return xor_modify_; }

  std::uint64_t read(std::size_t word, Phase phase);
  void write(std::size_t word, std::uint64_t value, Phase phase);
  void modify_xor(std::size_t word, std::uint64_t value, Phase phase);

  /// Unlogged inspection, for verification only.
  std::uint64_t peek(std::size_t word) const { return data_.at(word); }
  std::vector<std::uint64_t> snapshot() const { return data_; }

  const std::vector<Access>& log() const { return log_; }
  std::size_t count(AccessOp op) const;

 private:
  void check(std::size_t word) const;

  std::string id_;
  unsigned word_bits_;
  bool xor_modify_;
  std::vector<std::uint64_t> data_;
  std::vector<Access> log_;
};

struct KeygenArtifacts {
  DensePoly h;
  DensePoly x;
  SupportPoly y_support;
  DensePoly y_dense;
  DensePoly z;

  friend bool operator==(const KeygenArtifacts&, const KeygenArtifacts&) = default;
};

struct KeygenRun {
  KeygenArtifacts artifacts;
  std::vector<Arena> arenas;

  std::size_t total_capacity_bits() const;
  std::size_t max_capacity_bits() const;
};

/// x, then y, then h are drawn from one SHAKE256 stream over `seed`, in that
/// order, for both schedules.
///
/// Joint schedule, three arenas:
///   RAM0  x explicit, later accumulates z = h*y + x in place (XOR-modify)
///   RAM1  y explicit during its uniqueness check, then overwritten by h
///   RAM2  y support, written as each coordinate resolves
///
/// Requires cfg.word_width == 64; throws std::invalid_argument otherwise.
KeygenRun keygen_joint(const SamplerConfig& cfg, const Seed& seed);

/// Four-arena schedule with separate sampling and arithmetic:
///   RAM0  h explicit
///   RAM1  x explicit, later z
///   RAM2  y support
///   RAM3  unreduced product h*y, 2n bits
/// No XOR-modify port anywhere: accumulation is read then write.
KeygenRun keygen_baseline(const SamplerConfig& cfg, const Seed& seed);

}  // namespace hqcs
