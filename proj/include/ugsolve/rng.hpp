#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>

namespace ugsolve {

/// Seeded 64-bit generator. Same seed and same call sequence give the same
/// stream (within one standard library implementation).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  /// Uniform real in [0, 1).
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    std::shuffle(items.begin(), items.end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Deterministic child seed for stream `index` of `root` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

}  // namespace ugsolve
