#include <gtest/gtest.h>

#include <openssl/evp.h>

#include <numeric>

#include "hqcs/xof.hpp"

namespace hqcs {
namespace {

Seed counting_seed() {
  std::vector<std::uint8_t> b(40);
  std::iota(b.begin(), b.end(), 0);
  return Seed(b);
}

// Direct OpenSSL call, bypassing the stream.
std::vector<std::uint8_t> direct_shake(const std::vector<std::uint8_t>& in, std::size_t len) {
  std::vector<std::uint8_t> out(len);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr);
  EVP_DigestUpdate(ctx, in.data(), in.size());
  EVP_DigestFinalXOF(ctx, out.data(), out.size());
  EVP_MD_CTX_free(ctx);
  return out;
}

TEST(Seed, RejectsEmpty) {
  EXPECT_THROW(Seed(std::vector<std::uint8_t>{}), std::invalid_argument);
  EXPECT_THROW(Seed::from_hex(""), std::invalid_argument);
  EXPECT_THROW(Seed::from_hex("abc"), std::invalid_argument);
  EXPECT_EQ(Seed::from_hex("00ff").to_hex(), "00ff");
}

TEST(Backend, Names) {
  EXPECT_EQ(parse_backend("std"), XofBackend::Standard);
  EXPECT_EQ(parse_backend("shake256"), XofBackend::Standard);
  EXPECT_EQ(parse_backend("stub"), XofBackend::Stub);
  EXPECT_THROW(parse_backend("sha3"), std::invalid_argument);
}

TEST(XofStream, Deterministic) {
  XofStream a = XofStream::standard(counting_seed());
  XofStream b = XofStream::standard(counting_seed());
  for (int k = 0; k < 100; ++k) ASSERT_EQ(a.next_word(), b.next_word());
  EXPECT_EQ(a.words_emitted(), 100u);
}

TEST(XofStream, FrozenShake256Words) {
  // hashlib.shake_256(bytes(range(40))), tests/oracles/gen_vectors.py
  XofStream s = XofStream::standard(counting_seed());
  EXPECT_EQ(s.next_word(), 0xf3741579u);
  EXPECT_EQ(s.next_word(), 0x206da6e1u);
  EXPECT_EQ(s.next_word(), 0x83611f8cu);
  EXPECT_EQ(s.next_word(), 0xb6e289f9u);

  XofStream z = XofStream::standard(Seed::zeros());
  EXPECT_EQ(z.next_word(), 0x3a48ab49u);
}

TEST(XofStream, FirstWordIsLowHalfOfFirstBlock) {
  const auto bytes = direct_shake(counting_seed().bytes(), 8);
  std::uint64_t block = 0;
  for (int k = 0; k < 8; ++k) block |= std::uint64_t{bytes[k]} << (8 * k);
  XofStream s = XofStream::standard(counting_seed());
  EXPECT_EQ(s.next_word(), static_cast<std::uint32_t>(block));
  EXPECT_EQ(s.next_word(), static_cast<std::uint32_t>(block >> 32));
}

TEST(XofStream, SpansSeveralSqueezesConsistently) {
  // 35 words = 140 bytes, past the 136-byte first squeeze
  const auto bytes = direct_shake(counting_seed().bytes(), 4 * 35);
  XofStream s = XofStream::standard(counting_seed());
  for (std::size_t k = 0; k < 35; ++k) {
    const std::uint32_t want = std::uint32_t{bytes[4 * k]} | (std::uint32_t{bytes[4 * k + 1]} << 8) |
                               (std::uint32_t{bytes[4 * k + 2]} << 16) | (std::uint32_t{bytes[4 * k + 3]} << 24);
    ASSERT_EQ(s.next_word(), want) << "word " << k;
  }
  // frozen from hashlib
  XofStream t = XofStream::standard(counting_seed());
  for (int k = 0; k < 34; ++k) t.next_word();
  EXPECT_EQ(t.next_word(), 3491823206u);
}

TEST(XofStream, BlocksReassembleFromWordPairs) {
  XofStream words = XofStream::standard(counting_seed());
  XofStream blocks = XofStream::standard(counting_seed());
  for (int b = 0; b < 50; ++b) {
    const std::uint64_t lo = words.next_word();
    const std::uint64_t hi = words.next_word();
    ASSERT_EQ(blocks.next_block(), lo | (hi << 32));
  }
}

TEST(XofStream, LongRunNeverExhausts) {
  XofStream s = XofStream::standard(Seed::zeros());
  std::uint64_t x = 0;
  for (int k = 0; k < 100000; ++k) x ^= s.next_word();
  EXPECT_EQ(s.words_emitted(), 100000u);
  (void)x;
}

TEST(XofStream, StubPassthroughAndExhaustion) {
  XofStream s = XofStream::create(Seed::zeros(), XofBackend::Stub, {5, 7});
  EXPECT_EQ(s.next_word(), 5u);
  EXPECT_EQ(s.next_word(), 7u);
  EXPECT_THROW(s.next_word(), XofExhausted);

  XofStream z = XofStream::stub({0});
  EXPECT_EQ(z.next_word(), 0u);

  EXPECT_THROW(XofStream::create(Seed::zeros(), XofBackend::Stub, {}), std::invalid_argument);
}

TEST(XofStream, CopiesAreIndependent) {
  XofStream a = XofStream::standard(Seed::zeros());
  a.next_word();
  XofStream b = a;
  EXPECT_EQ(a.next_word(), b.next_word());
  EXPECT_EQ(a.words_emitted(), 2u);
}

}  // namespace
}  // namespace hqcs
