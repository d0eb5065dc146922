#ifndef AUTODIME_RANDOM_H_
#define AUTODIME_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace autodime {

// All randomness flows through explicitly passed generators. The helpers below
// avoid std:: distributions so that draws are identical across standard
// library implementations.
using Rng = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double UniformDouble(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling removes modulo bias.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Standard normal via Box-Muller.
inline double StandardNormal(Rng& rng) {
  double u1;
  do {
    u1 = UniformDouble(rng);
  } while (u1 <= 0.0);
  const double u2 = UniformDouble(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline bool Bernoulli(Rng& rng, double p) { return UniformDouble(rng) < p; }

// Derives an independent child seed so that separate streams (layouts,
// evaluation, rollouts) never share a generator.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Samples an index from non-negative weights that need not be normalized.
template <typename Weights>
int SampleFromWeights(Rng& rng, const Weights& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = UniformDouble(rng) * total;
  int last_positive = -1;
  int i = 0;
  for (double w : weights) {
    if (w > 0.0) {
      last_positive = i;
      if (u < w) return i;
      u -= w;
    }
    ++i;
  }
  return last_positive;
}

}  // namespace autodime

#endif  // AUTODIME_RANDOM_H_
