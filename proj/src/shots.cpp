#include "vqd/shots.hpp"

#include <cmath>
#include <stdexcept>

#include "vqd/overlap.hpp"

namespace vqd {

VarianceModel VarianceModel::worst_case(std::size_t n_terms, std::size_t n_overlaps) {
  VarianceModel m;
  m.sigma_terms.assign(n_terms, 1.0);
  m.sigma_overlaps.assign(n_overlaps, 0.5);
  return m;
}

VarianceModel variance_model_from_state(const Statevector& s, const PauliHamiltonian& h,
                                        std::span<const Statevector> prior_states) {
  VarianceModel m;
  for (const auto& t : h.terms()) {
    const double e = expectation_pauli(s, t.word);
    m.sigma_terms.push_back(std::sqrt(std::max(0.0, 1.0 - e * e)));
  }
  for (const auto& prior : prior_states) {
    const double p = exact_overlap(s, prior);
    m.sigma_overlaps.push_back(std::sqrt(std::max(0.0, p * (1.0 - p))));
  }
  return m;
}

double ShotBudget::total_raw() const {
  double t = 0.0;
  for (double m : raw_terms) t += m;
  for (double m : raw_overlaps) t += m;
  return t;
}

std::uint64_t ShotBudget::total_shots() const {
  std::uint64_t t = 0;
  for (auto m : term_shots) t += m;
  for (auto m : overlap_shots) t += m;
  return t;
}

namespace {

double variance_sum(std::span<const double> weights, std::span<const double> sigmas,
                    std::span<const double> counts, const char* what) {
  if (weights.size() != sigmas.size() || weights.size() != counts.size()) {
    throw std::invalid_argument(std::string(what) + ": size mismatch");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double num = weights[j] * weights[j] * sigmas[j] * sigmas[j];
    if (num == 0.0) continue;  // zero-variance terms need no samples
    if (counts[j] < 1.0) throw std::invalid_argument(std::string(what) + ": counts must be >= 1");
    acc += num / counts[j];
  }
  return acc;
}

void allocate(std::span<const double> weights, std::span<const double> sigmas, double s_total,
              double epsilon, std::vector<double>& raw, std::vector<std::uint64_t>& rounded) {
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double m = std::abs(weights[j]) * sigmas[j] * s_total / (epsilon * epsilon);
    raw.push_back(m);
    rounded.push_back(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(m))));
  }
}

}  // namespace

double vqe_variance(std::span<const double> coeffs, const VarianceModel& model,
                    std::span<const double> m_terms) {
  return variance_sum(coeffs, model.sigma_terms, m_terms, "vqe_variance");
}

double vqd_variance(std::span<const double> coeffs, std::span<const double> betas,
                    const VarianceModel& model, std::span<const double> m_terms,
                    std::span<const double> m_overlaps) {
  return variance_sum(coeffs, model.sigma_terms, m_terms, "vqd_variance") +
         variance_sum(betas, model.sigma_overlaps, m_overlaps, "vqd_variance");
}

ShotBudget optimal_vqe_allocation(std::span<const double> coeffs, const VarianceModel& model,
                                  double epsilon) {
  return optimal_vqd_allocation(coeffs, {}, model, epsilon);
}

ShotBudget optimal_vqd_allocation(std::span<const double> coeffs, std::span<const double> betas,
                                  const VarianceModel& model, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (coeffs.size() != model.sigma_terms.size() || betas.size() != model.sigma_overlaps.size()) {
    throw std::invalid_argument("model size mismatch");
  }
  double s_total = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    s_total += std::abs(coeffs[j]) * model.sigma_terms[j];
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    s_total += std::abs(betas[i]) * model.sigma_overlaps[i];
  }
  ShotBudget b;
  b.epsilon = epsilon;
  allocate(coeffs, model.sigma_terms, s_total, epsilon, b.raw_terms, b.term_shots);
  allocate(betas, model.sigma_overlaps, s_total, epsilon, b.raw_overlaps, b.overlap_shots);
  return b;
}

std::uint64_t total_samples_bound(std::span<const double> coeffs, std::span<const double> betas,
                                  double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  double s = 0.0;
  for (double c : coeffs) s += std::abs(c);
  for (double beta : betas) s += 0.5 * std::abs(beta);
  return static_cast<std::uint64_t>(std::ceil(s * s / (epsilon * epsilon)));
}

double worst_case_ratio(int k) {
  if (k < 0) throw std::invalid_argument("stage index must be nonnegative");
  return static_cast<double>(1 + k) * static_cast<double>(1 + k);
}

}  // namespace vqd
