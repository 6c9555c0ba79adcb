#include "hqcs/sampler.hpp"

#include <stdexcept>
#include <string>

namespace hqcs {

void SamplerConfig::validate() const {
  if (omega > kMaxOmega) throw std::invalid_argument("omega must be at most 75");
  if (n >= kMaxN) throw std::invalid_argument("n must be below 2^18");
  if (omega >= n) throw std::invalid_argument("omega must be below n");
  if (word_width != 8 && word_width != 16 && word_width != 32 && word_width != 64) {
    throw std::invalid_argument("word width must be 8, 16, 32 or 64");
  }
}

SamplerAlgorithm parse_algorithm(std::string_view name) {
  if (name == "orig") return SamplerAlgorithm::Original;
  if (name == "orig-rev") return SamplerAlgorithm::OriginalReversed;
  if (name == "new") return SamplerAlgorithm::New;
  throw std::invalid_argument("unknown sampling algorithm: " + std::string(name));
}

std::string_view algorithm_name(SamplerAlgorithm alg) {
  switch (alg) {
    case SamplerAlgorithm::Original:
      return "orig";
    case SamplerAlgorithm::OriginalReversed:
      return "orig-rev";
    case SamplerAlgorithm::New:
      return "new";
  }
  return "?";
}

namespace {

SampleResult sample_support_form(const SamplerConfig& cfg, XofStream& stream, bool reversed) {
  cfg.validate();
  const std::uint32_t w = cfg.omega;
  SampleResult out;

  std::vector<std::uint32_t> words(w);
  for (auto& x : words) x = stream.next_word();
  out.counters.words_consumed = w;

  const ReductionFactors factors(cfg.n, w);
  std::vector<std::uint32_t> support(w);
  for (std::uint32_t i = 0; i < w; ++i) {
    const std::uint32_t word = reversed ? words[w - 1 - i] : words[i];
    support[i] = i + barrett_reduce(word, cfg.n - i, factors.factor_for(i));
  }

  // Entries above i are already resolved when index i is checked, so a
  // collision can only be with a final coordinate.
  for (std::uint32_t k = 0; k < w; ++k) {
    const std::uint32_t i = w - 1 - k;
    std::uint32_t found = 0;
    for (std::uint32_t j = i + 1; j < w; ++j) {
      found |= static_cast<std::uint32_t>(support[i] == support[j]);
      ++out.counters.uniqueness_comparisons;
    }
    const std::uint32_t m = 0u - found;
    support[i] = (i & m) | (support[i] & ~m);
    out.counters.duplicate_resolutions += found;
  }

  out.support.coords = std::move(support);
  out.dense = transform(out.support, cfg);
  return out;
}

/// DensePoly viewed as an array of `wb`-bit words.
class DenseWordView {
 public:
  DenseWordView(DensePoly& p, unsigned wb) : p_(&p), wb_(wb) {}
  unsigned word_bits() const { return wb_; }
  std::uint64_t read(std::size_t word) const {
    const std::size_t bit = word * wb_;
    const std::uint64_t mask = wb_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << wb_) - 1;
    return (p_->word(bit / kStorageBits) >> (bit % kStorageBits)) & mask;
  }
  void write(std::size_t word, std::uint64_t value) {
    const std::size_t bit = word * wb_;
    const std::size_t k = bit / kStorageBits;
    const unsigned sh = bit % kStorageBits;
    const std::uint64_t mask = (wb_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << wb_) - 1) << sh;
    p_->set_word(k, (p_->word(k) & ~mask) | ((value << sh) & mask));
  }

 private:
  DensePoly* p_;
  unsigned wb_;
};

}  // namespace

SampleResult sample_original(const SamplerConfig& cfg, XofStream& stream) {
  return sample_support_form(cfg, stream, false);
}

SampleResult sample_original_reversed(const SamplerConfig& cfg, XofStream& stream) {
  return sample_support_form(cfg, stream, true);
}

SampleResult sample_new(const SamplerConfig& cfg, XofStream& stream, std::vector<SamplerOp>* ops) {
  cfg.validate();
  SampleResult out;
  out.dense = DensePoly(cfg.n);
  out.support.coords.assign(cfg.omega, 0);
  const ReductionFactors factors(cfg.n, cfg.omega);
  DenseWordView mem(out.dense, cfg.word_width);
  out.counters = sample_new_into(
      cfg, factors, stream, mem, [&](std::uint32_t i, std::uint32_t c) { out.support.coords[i] = c; }, ops);
  return out;
}

SampleResult sample(SamplerAlgorithm alg, const SamplerConfig& cfg, XofStream& stream) {
  switch (alg) {
    case SamplerAlgorithm::Original:
      return sample_original(cfg, stream);
    case SamplerAlgorithm::OriginalReversed:
      return sample_original_reversed(cfg, stream);
    case SamplerAlgorithm::New:
      return sample_new(cfg, stream);
  }
  throw std::invalid_argument("unknown sampling algorithm");
}

DensePoly transform(const SupportPoly& support, const SamplerConfig& cfg) {
  return DensePoly::from_support(cfg.n, support.coords);
}

DensePoly sample_dense_uniform(std::uint32_t n, XofStream& stream) {
  DensePoly h(n);
  for (std::size_t k = 0; k < h.word_count(); ++k) h.set_word(k, stream.next_block());
  return h;
}

}  // namespace hqcs
