#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hqcs {

inline constexpr std::size_t kDefaultSeedBytes = 40;

/// Seed for the word stream. Never empty.
class Seed {
 public:
  explicit Seed(std::vector<std::uint8_t> bytes);
  static Seed from_hex(std::string_view hex);
  static Seed zeros(std::size_t len = kDefaultSeedBytes);

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string to_hex() const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

enum class XofBackend { Standard, Stub };

/// Accepts "std", "standard", "shake256" and "stub".
XofBackend parse_backend(std::string_view name);
std::string_view backend_name(XofBackend backend);

/// Raised when a stub stream runs out of injected words.
class XofExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic stream of 32-bit words.
///
/// The standard backend squeezes SHAKE256(seed) in 64-bit blocks; block b
/// yields word 2b (its low half) and then word 2b+1 (its high half), both
/// read little-endian. Equivalently, word k is the little-endian 32-bit
/// value at output byte offset 4k.
///
/// The stub backend replays an injected word list and throws XofExhausted
/// once it runs dry.
class XofStream {
 public:
  static XofStream standard(const Seed& seed);
  static XofStream stub(std::vector<std::uint32_t> words);

  /// Throws std::invalid_argument for a stub backend without words.
  static XofStream create(const Seed& seed, XofBackend backend, std::vector<std::uint32_t> stub_words = {});

  std::uint32_t next_word();

  /// Two consecutive words packed as one 64-bit squeeze block, low word
  /// first.
  std::uint64_t next_block();

  XofBackend backend() const { return backend_; }
  std::size_t words_emitted() const { return emitted_; }

 private:
  XofStream() = default;
  void squeeze_more(std::size_t min_bytes);

  XofBackend backend_ = XofBackend::Standard;
  std::vector<std::uint8_t> seed_;
  std::vector<std::uint8_t> squeezed_;
  std::vector<std::uint32_t> stub_words_;
  std::size_t emitted_ = 0;
};

/// One-shot SHAKE256 of `input`, `out_len` bytes.
std::vector<std::uint8_t> shake256(const std::vector<std::uint8_t>& input, std::size_t out_len);

}  // namespace hqcs
