#ifndef COEXIST_KERNEL_RNG_HPP
#define COEXIST_KERNEL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

#include "coexist/kernel/errors.hpp"

namespace coexist {

/// Deterministic random stream, named by (node, purpose) so that the draw
/// sequence of one subsystem never shifts when another subsystem changes how
/// many values it consumes. xoshiro256** core seeded via splitmix64; identical
/// (seed, stream id) gives identical sequences on every platform.
class RngStream {
 public:
  RngStream() : RngStream(0, -1, "unnamed") {}

  RngStream(std::uint64_t seed, int node, std::string_view purpose) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the stream id
    auto mix = [&h](unsigned char b) {
      h ^= b;
      h *= 0x100000001b3ull;
    };
    for (char c : purpose) mix(static_cast<unsigned char>(c));
    for (int i = 0; i < 8; ++i)
      mix(static_cast<unsigned char>((static_cast<std::uint64_t>(node) >>
                                      (8 * i)) & 0xff));
    std::uint64_t sm = seed ^ h;
    for (auto& w : state_) w = splitmix64(sm);
    // All-zero state is invalid for xoshiro; splitmix cannot produce four
    // zero words from any seed, but keep the guard explicit.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform over {0, ..., n-1}. n == 0 is a fatal error.
  std::uint32_t uniform_int(std::uint32_t n) {
    COEXIST_CHECK_MSG(n >= 1, "uniform_int needs n >= 1");
    if (n == 1) return 0;
    // Rejection sampling for exact uniformity.
    const std::uint64_t span = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r = next_u64();
    while (r >= span) r = next_u64();
    return static_cast<std::uint32_t>(r % n);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Exponential with the given mean (inter-arrival times of a Poisson
  /// process of rate 1/mean).
  double exponential(double mean) {
    double u = uniform01();
    while (u <= 0.0) u = uniform01();
    return -mean * std::log(u);
  }

  /// Normal via Box-Muller (no spare caching, so the draw count per call is
  /// fixed and sequences stay aligned).
  double normal(double mean, double sigma) {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586477 * u2);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

/// One-shot mix used for run-seed derivation (seed_base ^ hash(lambda, drop)).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace coexist

#endif  // COEXIST_KERNEL_RNG_HPP
