#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hqsim {

/// SplitMix64 step; used to derive independent stream seeds.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. Streams are derived from
/// (master seed, trajectory index, channel) so that trajectories are
/// independent and gate/measurement/noise draws never interleave across
/// channels -- results are identical under any thread scheduling.
class RngStream {
public:
  enum Channel : uint64_t { kGates = 1, kMeasurements = 2, kNoise = 3,
                            kGeneric = 4 };

  RngStream(uint64_t master_seed, uint64_t trajectory, uint64_t channel) {
    uint64_t s = master_seed;
    uint64_t a = splitmix64(s);
    s = a ^ (trajectory * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    uint64_t b = splitmix64(s);
    s = b ^ (channel * 0x9e3779b97f4a7c15ULL);
    engine_.seed(splitmix64(s));
  }

  /// 64 random bits (mt19937_64 output is fully specified by the standard).
  uint64_t bits() { return engine_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Bernoulli coin with probability p.
  bool coin(double p) { return uniform01() < p; }

  /// Fair coin.
  bool fair_coin() { return bits() >> 63; }

  /// Unbiased integer in [0, n). Avoids std::uniform_int_distribution,
  /// which is not bit-stable across standard libraries.
  uint64_t uniform_int(uint64_t n) {
    // Lemire's multiply-shift with rejection.
    uint64_t x = bits();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = bits();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  /// Standard normal via Box-Muller (used by fitting/bootstrap code).
  double normal() {
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace hqsim
