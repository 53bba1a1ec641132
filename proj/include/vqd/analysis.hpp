#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "vqd/pauli.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

// Dense 2^n x 2^n matrix of a single Pauli word.
Eigen::MatrixXcd dense_pauli_word(const PauliString& p);

// Dense Hermitian matrix of a real Pauli sum (n <= 14).
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

// Dense matrix of a complex Pauli sum on n qubits.
Eigen::MatrixXcd dense_matrix(const ComplexPauliSum& sum, int n_qubits);

struct ExactSpectrum {
  std::vector<double> eigenvalues;       // ascending
  std::vector<Statevector> eigenvectors; // matching order
};

// Full Hermitian eigendecomposition (n <= 12).
ExactSpectrum exact_spectrum(const PauliHamiltonian& h);

// Eigendecomposition restricted to the fixed-particle-number block spanned
// by basis states whose popcount equals n_electrons. Only meaningful when H
// commutes with the number operator; eigenvectors are returned embedded in
// the full space.
ExactSpectrum sector_spectrum(const PauliHamiltonian& h, int n_electrons);

// Bounds on the ground energy of H + beta0 |psi~0><psi~0| when the deflated
// state has overlap deficit eps0 with the true ground state.
struct AccumulationBounds {
  double e0 = 0.0;
  double e1 = 0.0;
  double beta0 = 0.0;
  double eps0 = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Requires beta0 > (e1 - e0) / (1 - eps0); throws otherwise, naming the
// threshold. upper = e1 + beta0*eps0,
// lower = e1 - eps0 * beta0^2 / (beta0*(1-eps0) - (e1-e0)).
AccumulationBounds accumulation_bounds(double e0, double e1, double beta0, double eps0);

// First-order coefficient of the true minimum's shift below e1:
// beta0*(e1-e0) / (beta0 - (e1-e0)). The closed-form lower bound is looser;
// this is the exact perturbative slope for a worst-case impurity direction.
double taylor_lower_coefficient(double e0, double e1, double beta0);

// Single-linkage grouping: sorted energies within `tol` of their neighbour
// join the same group. Returns groups of indices into the *sorted* order.
std::vector<std::vector<std::size_t>> degeneracy_grouping(std::span<const double> energies,
                                                          double tol);

double median(std::span<const double> values);

// Standard error of the median by bootstrap resampling; deterministic per
// seed.
double bootstrap_median_stderr(std::span<const double> samples, int resamples,
                               std::uint64_t seed);

}  // namespace vqd
