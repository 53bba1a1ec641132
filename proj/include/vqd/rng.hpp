#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace vqd {

// SplitMix64 generator. Every stochastic routine in the library draws from
// one of these, seeded explicitly, so results are reproducible bit-for-bit
// across platforms and standard-library versions (std:: distributions make
// no such guarantee). Independent streams are derived with split().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n)) % n;
  }

  // Standard normal via Box-Muller (one value per call; no cached state).
  double normal() {
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

// Draw from Binomial(n, p). Exact sampler: CDF inversion when n*p is small,
// Hormann's BTRS transformed rejection otherwise, so cost is O(1) even for
// shot counts in the 1e8 range.
std::uint64_t binomial(SplitMix64& rng, std::uint64_t n, double p);

// Multinomial counts over `probs` (need not be exactly normalized; they are
// renormalized internally). Returned counts sum to `shots`.
std::vector<std::uint64_t> multinomial(SplitMix64& rng, std::uint64_t shots,
                                       std::span<const double> probs);

}  // namespace vqd
