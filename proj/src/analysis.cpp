#include "vqd/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "vqd/rng.hpp"

namespace vqd {

namespace {

void check_size_cap(int n_qubits, int cap, const char* what) {
  if (n_qubits > cap) {
    throw std::invalid_argument(std::string(what) + ": qubit count " +
                                std::to_string(n_qubits) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Eigen::MatrixXcd dense_pauli_word(const PauliString& p) {
  const int n = p.n_qubits();
  check_size_cap(n, 14, "dense_pauli_word");
  const PauliMasks m = make_masks(p);
  const int y_count = std::popcount(m.y);
  const std::uint64_t flip = m.flip();
  const std::uint64_t dim = 1ull << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  static constexpr std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::complex<double> ph = i_pow[y_count & 3];
    if (std::popcount(col & m.phase()) & 1) ph = -ph;
    out(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) = ph;
  }
  return out;
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
  check_size_cap(h.n_qubits(), 14, "dense_matrix");
  const std::uint64_t dim = 1ull << h.n_qubits();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) out += t.coefficient * dense_pauli_word(t.word);
  return out;
}

Eigen::MatrixXcd dense_matrix(const ComplexPauliSum& sum, int n_qubits) {
  check_size_cap(n_qubits, 14, "dense_matrix");
  const std::uint64_t dim = 1ull << n_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : sum) {
    if (t.word.n_qubits() != n_qubits) throw std::invalid_argument("word length mismatch");
    out += t.coefficient * dense_pauli_word(t.word);
  }
  return out;
}

ExactSpectrum exact_spectrum(const PauliHamiltonian& h) {
  check_size_cap(h.n_qubits(), 12, "exact_spectrum");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  ExactSpectrum out;
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    out.eigenvalues.push_back(vals(i));
    Statevector v(h.n_qubits());
    for (Eigen::Index j = 0; j < vecs.rows(); ++j) v.amplitudes[j] = vecs(j, i);
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

ExactSpectrum sector_spectrum(const PauliHamiltonian& h, int n_electrons) {
  check_size_cap(h.n_qubits(), 12, "sector_spectrum");
  const std::uint64_t dim = 1ull << h.n_qubits();
  std::vector<std::uint64_t> basis;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (std::popcount(i) == n_electrons) basis.push_back(i);
  }
  Eigen::MatrixXcd full = dense_matrix(h);
  const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd block(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) block(r, c) = full(basis[r], basis[c]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  ExactSpectrum out;
  for (Eigen::Index i = 0; i < d; ++i) {
    out.eigenvalues.push_back(solver.eigenvalues()(i));
    Statevector v(h.n_qubits());
    for (Eigen::Index j = 0; j < d; ++j) v.amplitudes[basis[j]] = solver.eigenvectors()(j, i);
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

AccumulationBounds accumulation_bounds(double e0, double e1, double beta0, double eps0) {
  if (eps0 < 0.0 || eps0 >= 1.0) throw std::invalid_argument("eps0 must lie in [0, 1)");
  const double threshold = (e1 - e0) / (1.0 - eps0);
  if (beta0 <= threshold) {
    throw std::invalid_argument("beta0 = " + std::to_string(beta0) +
                                " too small; bounds require beta0 > (E1-E0)/(1-eps0) = " +
                                std::to_string(threshold));
  }
  AccumulationBounds b;
  b.e0 = e0;
  b.e1 = e1;
  b.beta0 = beta0;
  b.eps0 = eps0;
  b.upper = e1 + beta0 * eps0;
  b.lower = e1 - eps0 * beta0 * beta0 / (beta0 * (1.0 - eps0) - (e1 - e0));
  return b;
}

double taylor_lower_coefficient(double e0, double e1, double beta0) {
  return beta0 * (e1 - e0) / (beta0 - (e1 - e0));
}

std::vector<std::vector<std::size_t>> degeneracy_grouping(std::span<const double> energies,
                                                          double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  std::vector<std::size_t> order(energies.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank == 0 ||
        energies[order[rank]] - energies[order[rank - 1]] > tol) {
      groups.emplace_back();
    }
    groups.back().push_back(order[rank]);
  }
  return groups;
}

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double bootstrap_median_stderr(std::span<const double> samples, int resamples,
                               std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("bootstrap of empty sample");
  if (resamples < 100) throw std::invalid_argument("need at least 100 resamples");
  SplitMix64 rng(seed);
  std::vector<double> medians(static_cast<std::size_t>(resamples));
  std::vector<double> draw(samples.size());
  for (auto& m : medians) {
    for (auto& x : draw) x = samples[rng.next_below(samples.size())];
    m = median(draw);
  }
  double mean = 0.0;
  for (double m : medians) mean += m;
  mean /= static_cast<double>(resamples);
  double ss = 0.0;
  for (double m : medians) ss += (m - mean) * (m - mean);
  return std::sqrt(ss / static_cast<double>(resamples - 1));
}

}  // namespace vqd
