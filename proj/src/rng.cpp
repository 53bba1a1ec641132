#include "vqd/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace vqd {

namespace {

// Stirling tail f(k) = log(k!) - [k*log(k) - k + 0.5*log(2*pi*k)].
double stirling_tail(double k) {
  static const double table[] = {
      0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
      0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
      0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
      0.00833056343336287};
  if (k <= 9.0) return table[static_cast<int>(k)];
  double kp1sq = (k + 1.0) * (k + 1.0);
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / (k + 1.0);
}

// Inversion by CDF walk; expected cost O(n*p), used only when n*p < 10.
std::uint64_t binomial_inversion(SplitMix64& rng, std::uint64_t n, double p) {
  double logq = std::log1p(-p);
  double s = p / (1.0 - p);
  double f = std::exp(static_cast<double>(n) * logq);  // P(X = 0)
  double u = rng.next_double();
  double cdf = f;
  std::uint64_t k = 0;
  while (u > cdf && k < n) {
    ++k;
    f *= s * (static_cast<double>(n - k + 1)) / static_cast<double>(k);
    cdf += f;
    if (f <= 0.0) break;  // underflow guard far in the tail
  }
  return k;
}

// BTRS rejection sampler (Hormann 1993), valid for n*p >= 10.
std::uint64_t binomial_btrs(SplitMix64& rng, std::uint64_t n, double p) {
  const double nd = static_cast<double>(n);
  const double q = 1.0 - p;
  const double spq = std::sqrt(nd * p * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / q;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((nd + 1.0) * p);
  for (;;) {
    double u = rng.next_double() - 0.5;
    double v = rng.next_double();
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + c);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || k > nd) continue;
    v = std::log(v * alpha / (a / (us * us) + b));
    double bound = (m + 0.5) * std::log((m + 1.0) / (r * (nd - m + 1.0))) +
                   (nd + 1.0) * std::log((nd - m + 1.0) / (nd - k + 1.0)) +
                   (k + 0.5) * std::log(r * (nd - k + 1.0) / (k + 1.0)) +
                   stirling_tail(m) + stirling_tail(nd - m) -
                   stirling_tail(k) - stirling_tail(nd - k);
    if (v <= bound) return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t binomial(SplitMix64& rng, std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(rng, n, 1.0 - p);
  if (static_cast<double>(n) * p < 10.0) return binomial_inversion(rng, n, p);
  return binomial_btrs(rng, n, p);
}

std::vector<std::uint64_t> multinomial(SplitMix64& rng, std::uint64_t shots,
                                       std::span<const double> probs) {
  if (probs.empty()) throw std::invalid_argument("multinomial: empty probability vector");
  std::vector<std::uint64_t> counts(probs.size(), 0);
  double remaining_p = 0.0;
  for (double p : probs) remaining_p += p;
  std::uint64_t remaining = shots;
  for (std::size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
    double frac = remaining_p > 0.0 ? std::clamp(probs[i] / remaining_p, 0.0, 1.0) : 0.0;
    counts[i] = binomial(rng, remaining, frac);
    remaining -= counts[i];
    remaining_p -= probs[i];
  }
  counts.back() += remaining;
  return counts;
}

}  // namespace vqd
