#include "vqd/overlap.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vqd {

double exact_overlap(const Statevector& a, const Statevector& b) {
  return std::norm(inner_product(a, b));
}

OverlapEstimate inverse_circuit_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                        std::uint64_t shots, SplitMix64& rng) {
  if (prep_i.n_qubits != prep_k.n_qubits) {
    throw std::invalid_argument("circuit qubit count mismatch");
  }
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  Statevector s = prepare_state(prep_k);
  apply_circuit(prep_i.inverse(), s);
  const double p_zero = std::min(std::norm(s.amplitudes[0]), 1.0);
  const std::uint64_t zeros = binomial(rng, shots, p_zero);
  OverlapEstimate est;
  est.value = static_cast<double>(zeros) / static_cast<double>(shots);
  est.shots = shots;
  est.kind = OverlapKind::InverseCircuit;
  return est;
}

OverlapEstimate inverse_circuit_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                        std::uint64_t shots, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto est = inverse_circuit_overlap(prep_i, prep_k, shots, rng);
  est.seed = seed;
  return est;
}

OverlapEstimate destructive_swap_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                         std::uint64_t shots, SplitMix64& rng) {
  if (prep_i.n_qubits != prep_k.n_qubits) {
    throw std::invalid_argument("circuit qubit count mismatch");
  }
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const int n = prep_i.n_qubits;
  Statevector joint = kron(prepare_state(prep_i), prepare_state(prep_k));
  // Bell measurement per pair (q, q + n): CNOT then H on the control.
  for (int q = 0; q < n; ++q) {
    apply_gate(Gate::cnot(q, q + n), joint);
    apply_gate(Gate::h(q), joint);
  }
  // Outcome contributes (-1)^(popcount(first_half AND second_half)).
  double p_plus = 0.0;
  const std::uint64_t low_mask = (1ull << n) - 1;
  for (std::uint64_t idx = 0; idx < joint.dim(); ++idx) {
    const std::uint64_t ands = (idx >> n) & idx & low_mask;
    if ((std::popcount(ands) & 1) == 0) p_plus += std::norm(joint.amplitudes[idx]);
  }
  p_plus = std::min(p_plus, 1.0);
  const std::uint64_t plus = binomial(rng, shots, p_plus);
  OverlapEstimate est;
  est.value = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
              static_cast<double>(shots);
  est.shots = shots;
  est.kind = OverlapKind::DestructiveSwap;
  return est;
}

OverlapEstimate destructive_swap_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                         std::uint64_t shots, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto est = destructive_swap_overlap(prep_i, prep_k, shots, rng);
  est.seed = seed;
  return est;
}

namespace {

// Post-measurement distribution after independent per-qubit readout flips:
// q(b') = sum_b p(b) * f^d(b,b') * (1-f)^(n-d).
std::vector<double> flipped_distribution(const Statevector& s, double flip_probability) {
  std::vector<double> p(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) p[i] = std::norm(s.amplitudes[i]);
  if (flip_probability <= 0.0) return p;
  std::vector<double> q(s.dim(), 0.0);
  const int n = s.n_qubits;
  for (std::uint64_t b = 0; b < p.size(); ++b) {
    if (p[b] == 0.0) continue;
    for (std::uint64_t c = 0; c < q.size(); ++c) {
      const int d = std::popcount(b ^ c);
      q[c] += p[b] * std::pow(flip_probability, d) * std::pow(1.0 - flip_probability, n - d);
    }
  }
  return q;
}

}  // namespace

FilteredOverlapEstimate symmetry_filtered_overlap(const Circuit& post_ref_i,
                                                  const Circuit& post_ref_k,
                                                  const Statevector& reference, int n_electrons,
                                                  std::uint64_t shots, SplitMix64& rng,
                                                  double flip_probability) {
  if (post_ref_i.n_qubits != post_ref_k.n_qubits ||
      post_ref_i.n_qubits != reference.n_qubits) {
    throw std::invalid_argument("qubit count mismatch");
  }
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (flip_probability < 0.0 || flip_probability > 0.5) {
    throw std::invalid_argument("flip probability must lie in [0, 0.5]");
  }
  Statevector s = apply_circuit_copy(post_ref_k, reference);
  apply_circuit(post_ref_i.inverse(), s);

  std::uint64_t ref_index = 0;
  double best = -1.0;
  for (std::uint64_t i = 0; i < reference.dim(); ++i) {
    if (std::norm(reference.amplitudes[i]) > best) {
      best = std::norm(reference.amplitudes[i]);
      ref_index = i;
    }
  }

  const auto probs = flipped_distribution(s, flip_probability);
  const auto counts = multinomial(rng, shots, probs);

  std::uint64_t accepted = 0, hits = 0, ref_total = 0;
  for (std::uint64_t b = 0; b < counts.size(); ++b) {
    if (counts[b] == 0) continue;
    if (b == ref_index) ref_total = counts[b];
    if (std::popcount(b) == n_electrons) {
      accepted += counts[b];
      if (b == ref_index) hits = counts[b];
    }
  }

  FilteredOverlapEstimate est;
  est.shots = shots;
  est.accepted = accepted;
  est.unfiltered_value = static_cast<double>(ref_total) / static_cast<double>(shots);
  est.value = accepted > 0 ? static_cast<double>(hits) / static_cast<double>(accepted)
                           : std::numeric_limits<double>::quiet_NaN();
  return est;
}

FilteredOverlapEstimate symmetry_filtered_overlap(const Circuit& post_ref_i,
                                                  const Circuit& post_ref_k,
                                                  const Statevector& reference, int n_electrons,
                                                  std::uint64_t shots, std::uint64_t seed,
                                                  double flip_probability) {
  SplitMix64 rng(seed);
  auto est = symmetry_filtered_overlap(post_ref_i, post_ref_k, reference, n_electrons, shots,
                                       rng, flip_probability);
  est.seed = seed;
  return est;
}

RefineResult refine_inverse(std::span<const double> target_params, const Ansatz& ansatz,
                            const NelderMeadSettings& settings,
                            std::span<const double> initial_params) {
  const Statevector target = ansatz.prepare(target_params);
  auto loss = [&](std::span<const double> params) {
    return -exact_overlap(ansatz.prepare(params), target);
  };
  std::vector<double> x0(initial_params.empty()
                             ? std::vector<double>(target_params.begin(), target_params.end())
                             : std::vector<double>(initial_params.begin(), initial_params.end()));
  auto nm = nelder_mead(loss, x0, settings);
  RefineResult out;
  out.params = nm.x;
  out.overlap = -nm.f;
  out.iterations = nm.iterations;
  out.converged = out.overlap > 0.999;
  return out;
}

}  // namespace vqd
