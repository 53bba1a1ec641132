#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vqd/pauli.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

// Per-term and per-overlap standard deviations of single-shot outcomes.
// Worst case: sigma_j = 1 (Pauli outcomes are +-1) and sigma~_i = 1/2
// (overlap variance p(1-p) <= 1/4).
struct VarianceModel {
  std::vector<double> sigma_terms;
  std::vector<double> sigma_overlaps;

  static VarianceModel worst_case(std::size_t n_terms, std::size_t n_overlaps);
};

// Adaptive re-estimation at the current state: sigma_j^2 = 1 - <P_j>^2,
// sigma~_i^2 = p_i (1 - p_i) for overlap p_i with prior state i.
VarianceModel variance_model_from_state(const Statevector& s, const PauliHamiltonian& h,
                                        std::span<const Statevector> prior_states);

enum class RoundingMode { CeilFloorOne };

// Sample allocation. `raw_*` hold the real-valued Lagrange solution (these
// reproduce the target variance exactly); `term_shots`/`overlap_shots` are
// the rounded counts actually used, ceiled and floored at 1.
struct ShotBudget {
  std::vector<double> raw_terms;
  std::vector<double> raw_overlaps;
  std::vector<std::uint64_t> term_shots;
  std::vector<std::uint64_t> overlap_shots;
  double epsilon = 0.0;
  RoundingMode rounding = RoundingMode::CeilFloorOne;

  double total_raw() const;
  std::uint64_t total_shots() const;
};

// sum_j c_j^2 sigma_j^2 / M_j.
double vqe_variance(std::span<const double> coeffs, const VarianceModel& model,
                    std::span<const double> m_terms);

// VQE variance plus the deflation penalty terms sum_i beta_i^2 sigma~_i^2 / M~_i.
double vqd_variance(std::span<const double> coeffs, std::span<const double> betas,
                    const VarianceModel& model, std::span<const double> m_terms,
                    std::span<const double> m_overlaps);

// M_j = |c_j| sigma_j * (sum_i |c_i| sigma_i) / eps^2.
ShotBudget optimal_vqe_allocation(std::span<const double> coeffs, const VarianceModel& model,
                                  double epsilon);

// M_j = |c_j| sigma_j * S / eps^2, M~_i = beta_i sigma~_i * S / eps^2 with
// S the combined weighted sum. Reduces to the VQE allocation when no betas.
ShotBudget optimal_vqd_allocation(std::span<const double> coeffs, std::span<const double> betas,
                                  const VarianceModel& model, double epsilon);

// Worst-case total: ceil((sum|c_j| + 0.5 sum beta_i)^2 / eps^2).
std::uint64_t total_samples_bound(std::span<const double> coeffs, std::span<const double> betas,
                                  double epsilon);

// (1 + k)^2: cost of stage k relative to VQE when every beta_i is the
// always-sufficient 2 sum|c_j|.
double worst_case_ratio(int k);

}  // namespace vqd
