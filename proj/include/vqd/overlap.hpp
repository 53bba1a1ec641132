#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vqd/ansatz.hpp"
#include "vqd/circuit.hpp"
#include "vqd/nelder_mead.hpp"
#include "vqd/rng.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

enum class OverlapKind { Exact, InverseCircuit, DestructiveSwap, SymmetryFiltered };

// A single overlap estimate. Values are reported unclamped; the sampling
// estimators can fluctuate below 0 (the SWAP estimator down to -1 per
// shot), so callers choose their own clamping policy.
struct OverlapEstimate {
  double value = 0.0;
  std::uint64_t shots = 0;  // 0 for the exact oracle
  OverlapKind kind = OverlapKind::Exact;
  std::uint64_t seed = 0;
};

// |<a|b>|^2.
double exact_overlap(const Statevector& a, const Statevector& b);

// Fraction of all-zero bitstrings after preparing R(i)^dag R(k) |0>.
OverlapEstimate inverse_circuit_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                        std::uint64_t shots, std::uint64_t seed);
OverlapEstimate inverse_circuit_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                        std::uint64_t shots, SplitMix64& rng);

// Pairwise Bell measurements on R(i)|0> (x) R(k)|0>; each shot contributes
// (-1)^(sum of pairwise ANDs).
OverlapEstimate destructive_swap_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                         std::uint64_t shots, std::uint64_t seed);
OverlapEstimate destructive_swap_overlap(const Circuit& prep_i, const Circuit& prep_k,
                                         std::uint64_t shots, SplitMix64& rng);

// Symmetry-filtered estimate: sample V(i)^dag V(k) |ref>, flip each readout
// bit with flip_probability, discard bitstrings whose electron count is
// wrong, and report the reference-bitstring fraction among the survivors.
// The same counts also yield the unfiltered estimate for comparison.
struct FilteredOverlapEstimate {
  double value = 0.0;            // filtered; NaN when every shot was discarded
  double unfiltered_value = 0.0; // reference fraction over all shots
  std::uint64_t shots = 0;
  std::uint64_t accepted = 0;
  std::uint64_t seed = 0;
};

FilteredOverlapEstimate symmetry_filtered_overlap(const Circuit& post_ref_i,
                                                  const Circuit& post_ref_k,
                                                  const Statevector& reference, int n_electrons,
                                                  std::uint64_t shots, std::uint64_t seed,
                                                  double flip_probability);
FilteredOverlapEstimate symmetry_filtered_overlap(const Circuit& post_ref_i,
                                                  const Circuit& post_ref_k,
                                                  const Statevector& reference, int n_electrons,
                                                  std::uint64_t shots, SplitMix64& rng,
                                                  double flip_probability);

// Re-derive preparation parameters for a stored state by maximizing the
// self-overlap |<0| R(lambda)^dag R(lambda*) |0>|^2 with lambda* fixed.
// Failure to exceed overlap 0.999 is reported, not fatal.
struct RefineResult {
  std::vector<double> params;
  double overlap = 0.0;
  bool converged = false;
  int iterations = 0;
};

RefineResult refine_inverse(std::span<const double> target_params, const Ansatz& ansatz,
                            const NelderMeadSettings& settings,
                            std::span<const double> initial_params = {});

}  // namespace vqd
