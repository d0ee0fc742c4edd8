#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace qdf {

/// FNV-1a over a byte string; used for config hashes and seed derivation.
std::uint64_t fnv1a64(std::string_view bytes);

/// SplitMix64 single step; good enough to decorrelate derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for a named sub-stream (dataset split, init, epoch shuffles, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  return splitmix64(base ^ fnv1a64(tag));
}

/// Deterministic random source. std::mt19937_64 output is pinned by the
/// standard; the distribution transforms live here because the std ones are
/// implementation-defined and would break byte-for-byte reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via Box-Muller.
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace qdf
