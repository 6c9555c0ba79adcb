#include <gtest/gtest.h>

#include <random>

#include "hqcs/oracle.hpp"
#include "hqcs/poly.hpp"

namespace hqcs {
namespace {

TEST(DensePoly, StartsZeroWithPartialTopWord) {
  DensePoly p(17669);
  EXPECT_EQ(p.word_count(), 277u);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.word_mask(276), (std::uint64_t{1} << 5) - 1);  // 17669 mod 64 == 5
}

TEST(DensePoly, FromWordsRejectsBitsAboveBound) {
  EXPECT_THROW(DensePoly::from_words(7, {0x80}), std::invalid_argument);
  EXPECT_THROW(DensePoly::from_words(7, {0, 0}), std::invalid_argument);
  EXPECT_NO_THROW(DensePoly::from_words(7, {0x7f}));
}

TEST(DensePoly, SetWordDropsOutOfRangeBits) {
  DensePoly p(65);
  p.set_word(1, ~std::uint64_t{0});
  EXPECT_EQ(p.word(1), 1u);
  EXPECT_EQ(p.weight(), 1u);
}

TEST(DensePoly, FromSupportErrors) {
  const std::vector<std::uint32_t> dup = {3, 3};
  const std::vector<std::uint32_t> big = {8};
  EXPECT_THROW(DensePoly::from_support(8, dup), std::invalid_argument);
  EXPECT_THROW(DensePoly::from_support(8, big), std::invalid_argument);
}

TEST(DensePoly, NarrowWordView) {
  const std::vector<std::uint32_t> c = {0, 5};
  const auto p = DensePoly::from_support(8, c);
  EXPECT_EQ(p.words_of_width(8), std::vector<std::uint64_t>{0b00100001});

  const std::vector<std::uint32_t> c2 = {1, 17, 40};
  const auto q = DensePoly::from_support(41, c2);
  EXPECT_EQ(q.words_of_width(16), (std::vector<std::uint64_t>{0x2, 0x2, 0x100}));
  EXPECT_THROW(q.words_of_width(12), std::invalid_argument);
}

TEST(DensePoly, HexLayoutIsLittleEndianBitOrder) {
  const std::vector<std::uint32_t> c = {0, 9, 16};
  const auto p = DensePoly::from_support(17, c);
  // bytes: 0x01, 0x02, 0x01
  EXPECT_EQ(p.to_hex(), "010201");
  EXPECT_EQ(DensePoly::from_hex("010201", 17), p);
}

TEST(DensePoly, HexErrors) {
  EXPECT_THROW(DensePoly::from_hex("01", 17), std::invalid_argument);      // wrong length
  EXPECT_THROW(DensePoly::from_hex("0102zz", 17), std::invalid_argument);  // bad digit
  EXPECT_THROW(DensePoly::from_hex("010202", 17), std::invalid_argument);  // bit 17 set
}

TEST(DensePoly, HexRoundTripProperty) {
  std::mt19937_64 rng(1);
  for (const std::size_t n : {1u, 5u, 8u, 63u, 64u, 65u, 129u, 17669u}) {
    for (int k = 0; k < 20; ++k) {
      const auto p = oracle::random_dense(n, rng);
      const auto hex = p.to_hex();
      ASSERT_EQ(hex.size(), 2 * ((n + 7) / 8));
      ASSERT_EQ(DensePoly::from_hex(hex, n), p);
    }
  }
}

TEST(DensePoly, SupportScanRecoversSortedSet) {
  std::mt19937_64 rng(2);
  auto coords = oracle::random_support(17669, 66, rng);
  const auto p = DensePoly::from_support(17669, coords);
  std::sort(coords.begin(), coords.end());
  EXPECT_EQ(p.weight(), 66u);
  EXPECT_EQ(p.support(), coords);
}

TEST(SupportPoly, Validate) {
  EXPECT_NO_THROW((SupportPoly{{4, 1, 2}}.validate(5)));
  EXPECT_THROW((SupportPoly{{4, 1, 4}}.validate(5)), std::invalid_argument);
  EXPECT_THROW((SupportPoly{{5}}.validate(5)), std::invalid_argument);
}

}  // namespace
}  // namespace hqcs
