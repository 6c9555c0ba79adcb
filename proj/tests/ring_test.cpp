#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hqcs/oracle.hpp"
#include "hqcs/ring.hpp"

namespace hqcs {
namespace {

DensePoly poly(std::size_t n, std::vector<std::uint32_t> c) { return DensePoly::from_support(n, c); }

TEST(Ring, HandExample) {
  // (x^3 + x + 1) * (x^2 + x^5) + x^6 mod x^7 - 1, from tests/oracles/gen_vectors.py
  const auto z = mul_sparse_acc(poly(7, {0, 1, 3}), SupportPoly{{2, 5}}, poly(7, {6}));
  EXPECT_EQ(z.support(), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(Ring, MonomialOneIsIdentity) {
  std::mt19937_64 rng(1);
  for (const std::size_t n : {7u, 64u, 65u, 17669u}) {
    const auto h = oracle::random_dense(n, rng);
    EXPECT_EQ(mul_sparse_acc(h, SupportPoly{{0}}, DensePoly(n)), h);
  }
}

TEST(Ring, ZeroMultiplicandLeavesAccumulator) {
  std::mt19937_64 rng(2);
  const auto acc = oracle::random_dense(17669, rng);
  EXPECT_EQ(mul_sparse_acc(DensePoly(17669), SupportPoly{{1, 500, 17668}}, acc), acc);
  EXPECT_EQ(mul_sparse_acc(oracle::random_dense(17669, rng), SupportPoly{}, acc), acc);
}

TEST(Ring, MatchesConvolveThenReduce) {
  std::mt19937_64 rng(3);
  for (const std::size_t n : {7u, 63u, 64u, 65u, 127u, 129u}) {
    for (int k = 0; k < 200; ++k) {
      const auto h = oracle::random_dense(n, rng);
      const auto acc = oracle::random_dense(n, rng);
      const auto y = oracle::random_support(n, 1 + k % std::min<std::size_t>(n - 1, 12), rng);
      ASSERT_EQ(mul_sparse_acc(h, SupportPoly{y}, acc), oracle::convolve_then_reduce(h, y, acc)) << "n=" << n;
    }
  }
}

TEST(Ring, MatchesConvolveThenReduceAtFullSize) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const auto h = oracle::random_dense(17669, rng);
    const auto acc = oracle::random_dense(17669, rng);
    const auto y = oracle::random_support(17669, 66, rng);
    ASSERT_EQ(mul_sparse_acc(h, SupportPoly{y}, acc), oracle::convolve_then_reduce(h, y, acc));
  }
}

TEST(Ring, EverySingleCoordinateAtWordBoundaries) {
  std::mt19937_64 rng(5);
  for (const std::size_t n : {63u, 64u, 65u}) {
    const auto h = oracle::random_dense(n, rng);
    for (std::uint32_t c = 0; c < n; ++c) {
      ASSERT_EQ(mul_sparse_acc(h, SupportPoly{{c}}, DensePoly(n)), rotl_poly(h, c)) << "n=" << n << " c=" << c;
    }
  }
}

TEST(Rotate, TopBitWrapsToZero) {
  const auto r = rotl_poly(poly(17669, {17668}), 1);
  EXPECT_EQ(r.support(), std::vector<std::uint32_t>{0});
  EXPECT_EQ(rotl_poly(poly(65, {64, 0}), 64).support(), (std::vector<std::uint32_t>{63, 64}));
}

TEST(Rotate, ComposesAdditively) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::uint32_t> shift(0, 17668);
  const auto h = oracle::random_dense(17669, rng);
  for (int k = 0; k < 20; ++k) {
    const std::uint32_t a = shift(rng), b = shift(rng);
    ASSERT_EQ(rotl_poly(rotl_poly(h, a), b), rotl_poly(h, (a + b) % 17669));
  }
  EXPECT_EQ(rotl_poly(h, 0), h);
  EXPECT_THROW(rotl_poly(h, 17669), std::invalid_argument);
}

TEST(Add, SelfInverseAndPopcount) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto a = oracle::random_dense(17669, rng);
    const auto b = oracle::random_dense(17669, rng);
    const auto s = add_poly(a, b);
    ASSERT_TRUE(add_poly(a, a).is_zero());
    ASSERT_EQ(add_poly(s, b), a);
    ASSERT_EQ(add_poly(a, DensePoly(17669)), a);
    // |a ^ b| = |a| + |b| - 2|a & b|
    std::size_t both = 0;
    for (std::size_t w = 0; w < a.word_count(); ++w) both += std::popcount(a.word(w) & b.word(w));
    ASSERT_EQ(s.weight(), a.weight() + b.weight() - 2 * both);
  }
}

TEST(Ring, AccumulatorPreloadEqualsLaterAddition) {
  std::mt19937_64 rng(8);
  const auto h = oracle::random_dense(17669, rng);
  const auto x = oracle::random_dense(17669, rng);
  const SupportPoly y{oracle::random_support(17669, 66, rng)};
  EXPECT_EQ(mul_sparse_acc(h, y, x), add_poly(mul_sparse_acc(h, y, DensePoly(17669)), x));
}

TEST(Ring, CoordinateOrderDoesNotMatter) {
  std::mt19937_64 rng(9);
  const auto h = oracle::random_dense(1000, rng);
  auto y = oracle::random_support(1000, 40, rng);
  const auto first = mul_sparse_acc(h, SupportPoly{y}, DensePoly(1000));
  std::shuffle(y.begin(), y.end(), rng);
  EXPECT_EQ(mul_sparse_acc(h, SupportPoly{y}, DensePoly(1000)), first);
}

TEST(Ring, NoBitsAboveDegreeBound) {
  std::mt19937_64 rng(10);
  for (const std::size_t n : {7u, 65u, 17669u}) {
    const auto z = mul_sparse_acc(oracle::random_dense(n, rng), SupportPoly{oracle::random_support(n, 5, rng)},
                                  oracle::random_dense(n, rng));
    const std::size_t top = z.word_count() - 1;
    EXPECT_EQ(z.word(top) & ~z.word_mask(top), 0u);
  }
}

TEST(Ring, Errors) {
  EXPECT_THROW(add_poly(DensePoly(7), DensePoly(8)), std::invalid_argument);
  EXPECT_THROW(mul_sparse_acc(DensePoly(7), SupportPoly{{1}}, DensePoly(8)), std::invalid_argument);
  EXPECT_THROW(mul_sparse_acc(DensePoly(7), SupportPoly{{7}}, DensePoly(7)), std::invalid_argument);
}

}  // namespace
}  // namespace hqcs
