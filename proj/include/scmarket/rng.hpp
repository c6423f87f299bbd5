#pragma once

#include <cstdint>
#include <string_view>

namespace scmarket {

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness
/// is needed so that results are bit-reproducible across platforms; the
/// standard-library distributions are implementation-defined and are not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] (inclusive). Modulo bias is irrelevant at
  /// the range sizes used here.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Derives an independent generator; the parent stream advances once.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Derives a stream seed from (root seed, label, index) so that every sweep
/// cell owns an independent stream regardless of execution order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view label,
                                   std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  h ^= index + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return SplitMix64(h).next();
}

}  // namespace scmarket
