#pragma once

#include <cmath>
#include <cstdint>

namespace qeraser {

// Deterministic, platform-independent generators. The standard <random>
// engines are specified bit-exactly but the distributions are not, so all
// uniform/exponential/normal transforms are done by hand here.

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kSplitMixGamma;
    return splitmix64_mix(state_);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** (Blackman & Vigna), seeded through SplitMix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1); never returns 0 or 1, so logs and
  // inverse CDFs stay finite.
  double uniform_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

  // Box-Muller; one value per call, the second is discarded to keep the
  // draw count per call fixed.
  double normal() {
    const double u = uniform_open();
    const double v = uniform_open();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(6.283185307179586476925287 * v);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Sub-seed for the k-th independent stream of a run. Equals the k-th output
// of SplitMix64 started at `seed`, without the O(k) walk, so chunked and
// sequential generation derive identical per-item generators.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64_mix(seed + (k + 1) * kSplitMixGamma);
}

}  // namespace qeraser
