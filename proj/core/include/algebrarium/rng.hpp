#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace algebrarium::rng {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Order-sensitive combination of words into one well-mixed seed.
std::uint64_t mix(std::initializer_list<std::uint64_t> words) noexcept;
/// 64-bit FNV-1a; stable across platforms.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

/// Deterministic random stream. Distributions are implemented here rather than
/// via <random> distributions so outputs are identical across standard libraries.
class Stream {
public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }

private:
  std::mt19937_64 engine_;
};

}  // namespace algebrarium::rng
