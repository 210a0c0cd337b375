#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pesa {

/// Seeded random stream with named substream derivation.
///
/// Substreams are derived from the base seed and a tag, never from engine
/// state, so the set of draws taken on one stream cannot shift another.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed)
      : seed_(seed), engine_(mix(seed)) {}

  /// Derive an independent stream identified by `tag`.
  RandomStream substream(std::string_view tag) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return RandomStream(mix(seed_ ^ h));
  }

  std::uint64_t seed() const { return seed_; }

  /// U[0,1)
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// N(0,1)
  double normal() { return normal_(engine_); }

  /// Uniform index in [0, n)
  std::size_t uniform_index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace pesa
