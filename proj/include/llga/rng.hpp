#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace llga {

// One step of SplitMix64 (Steele, Lea, Flood 2014). Used for seeding and for
// deriving per-replication seeds from (master seed, stream index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-mode seed derivation: stream k of a master seed. Streams for
// distinct k are decorrelated by the SplitMix64 mixer and never shared.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream) {
  std::uint64_t s = master_seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
  return splitmix64(s);
}

// Seeded pseudo-random source: xoshiro256++ (Blackman & Vigna 2019) with
// SplitMix64 state expansion. All variate generation below is implemented
// explicitly so that identical seeds give byte-identical streams on every
// platform; nothing from <random> is used.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  // Stream for replication `stream` of `master_seed`.
  static RandomSource derived(std::uint64_t master_seed, std::uint64_t stream) {
    return RandomSource(derive_seed(master_seed, stream));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53 significant bits.
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound); bound >= 1. Masked rejection, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  bool bernoulli(double p) { return u01() < p; }

  // Binomial(n, p) by skip-sampling over the geometric gaps between
  // successes; expected cost O(np + 1).
  std::uint64_t binomial(std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);
    const double log_q = std::log1p(-p);
    std::uint64_t count = 0;
    std::uint64_t pos = 0;
    for (;;) {
      const double u = 1.0 - u01();  // (0, 1]
      pos += static_cast<std::uint64_t>(std::floor(std::log(u) / log_q)) + 1;
      if (pos > n) return count;
      ++count;
    }
  }

  // Geometric with success probability p, support {1, 2, ...}:
  // Pr[X = k] = (1-p)^(k-1) p.
  std::uint64_t geometric(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric: p outside (0,1]");
    if (p == 1.0) return 1;
    const double u = 1.0 - u01();  // (0, 1]
    return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p))) + 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
  std::uint64_t seed_;
};

}  // namespace llga
