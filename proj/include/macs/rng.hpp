#pragma once
// Deterministic pseudo-random source for the synthetic generators.
//
// Every drawn quantity keys a fresh SplitMix64 stream off (seed, stream tag,
// item id), so generation is reproducible bit-for-bit regardless of the order
// items are produced in.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace macs {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes exactly two raw draws per call.
  double normal() {
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t id) {
  SplitMix64 g(seed ^ (tag * 0xA24BAED4963EE407ull) ^ (id * 0x9FB21C651E98DF25ull));
  g.next();
  return g.next();
}

inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t id) {
  return SplitMix64(derive_stream(seed, tag, id));
}

}  // namespace macs
