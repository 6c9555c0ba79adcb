#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hqcs/poly.hpp"
#include "hqcs/xof.hpp"

// Reference computations used only to check the library. None of them
// shares code with the implementation paths they check.
namespace hqcs::oracle {

/// acc + h*y in F2[X]/(X^n - 1): bit-by-bit convolution into a 2n-length
/// buffer, then the upper half folded onto the lower.
DensePoly convolve_then_reduce(const DensePoly& h, const std::vector<std::uint32_t>& y, const DensePoly& acc);

/// Reproducible pseudo-random seeds of `len` bytes.
std::vector<Seed> seeds(std::size_t count, std::uint64_t salt, std::size_t len = kDefaultSeedBytes);

DensePoly random_dense(std::size_t n, std::mt19937_64& rng);

/// `count` distinct coordinates in [0, n), in random order.
std::vector<std::uint32_t> random_support(std::size_t n, std::size_t count, std::mt19937_64& rng);

}  // namespace hqcs::oracle
