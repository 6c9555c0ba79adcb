#include "hqcs/xof.hpp"

#include <openssl/evp.h>

#include <memory>

#include "hqcs/poly.hpp"

namespace hqcs {

namespace {
// SHAKE256 rate.
constexpr std::size_t kInitialSqueeze = 136;
}  // namespace

Seed::Seed(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("seed must not be empty");
}

Seed Seed::from_hex(std::string_view hex) { return Seed(hex_to_bytes(hex)); }

Seed Seed::zeros(std::size_t len) { return Seed(std::vector<std::uint8_t>(len, 0)); }

std::string Seed::to_hex() const { return bytes_to_hex(bytes_); }

XofBackend parse_backend(std::string_view name) {
  if (name == "std" || name == "standard" || name == "shake256") return XofBackend::Standard;
  if (name == "stub") return XofBackend::Stub;
  throw std::invalid_argument("unknown xof backend: " + std::string(name));
}

std::string_view backend_name(XofBackend backend) {
  return backend == XofBackend::Standard ? "std" : "stub";
}

std::vector<std::uint8_t> shake256(const std::vector<std::uint8_t>& input, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::vector<std::uint8_t> out(out_len);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw std::runtime_error("SHAKE256 evaluation failed");
  }
  return out;
}

XofStream XofStream::standard(const Seed& seed) {
  XofStream s;
  s.backend_ = XofBackend::Standard;
  s.seed_ = seed.bytes();
  return s;
}

XofStream XofStream::stub(std::vector<std::uint32_t> words) {
  XofStream s;
  s.backend_ = XofBackend::Stub;
  s.stub_words_ = std::move(words);
  return s;
}

XofStream XofStream::create(const Seed& seed, XofBackend backend, std::vector<std::uint32_t> stub_words) {
  switch (backend) {
    case XofBackend::Standard:
      return standard(seed);
    case XofBackend::Stub:
      if (stub_words.empty()) throw std::invalid_argument("stub xof backend needs an explicit word list");
      return stub(std::move(stub_words));
  }
  throw std::invalid_argument("unknown xof backend");
}

// SHAKE output is prefix-stable, so a longer squeeze extends the previous
// one; doubling keeps the total work linear in the bytes consumed.
void XofStream::squeeze_more(std::size_t min_bytes) {
  std::size_t len = squeezed_.empty() ? kInitialSqueeze : squeezed_.size();
  while (len < min_bytes) len *= 2;
  squeezed_ = shake256(seed_, len);
}

std::uint32_t XofStream::next_word() {
  if (backend_ == XofBackend::Stub) {
    if (emitted_ >= stub_words_.size()) {
      throw XofExhausted("stub xof stream exhausted after " + std::to_string(emitted_) + " words");
    }
    return stub_words_[emitted_++];
  }
  const std::size_t off = 4 * emitted_;
  if (off + 4 > squeezed_.size()) squeeze_more(off + 4);
  const std::uint32_t w = std::uint32_t{squeezed_[off]} | (std::uint32_t{squeezed_[off + 1]} << 8) |
                          (std::uint32_t{squeezed_[off + 2]} << 16) | (std::uint32_t{squeezed_[off + 3]} << 24);
  ++emitted_;
  return w;
}

std::uint64_t XofStream::next_block() {
  const std::uint64_t lo = next_word();
  const std::uint64_t hi = next_word();
  return lo | (hi << 32);
}

}  // namespace hqcs
