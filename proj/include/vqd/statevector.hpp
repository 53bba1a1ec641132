#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vqd/pauli.hpp"
#include "vqd/rng.hpp"

namespace vqd {

using Amplitude = std::complex<double>;

// Dense 2^n statevector. Index convention: qubit 0 is the most significant
// bit, matching the qubit-0-leftmost convention of Pauli words and printed
// bitstrings.
struct Statevector {
  int n_qubits = 0;
  std::vector<Amplitude> amplitudes;

  Statevector() = default;
  explicit Statevector(int n) : n_qubits(n), amplitudes(std::size_t{1} << n) {}

  static Statevector zero_state(int n_qubits);
  static Statevector basis_state(int n_qubits, std::uint64_t index);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

std::string index_to_bitstring(int n_qubits, std::uint64_t index);

std::complex<double> inner_product(const Statevector& a, const Statevector& b);

// P|psi> in place.
void apply_pauli(const PauliString& p, Statevector& s);

double expectation_pauli(const Statevector& s, const PauliString& p);
double expectation_hamiltonian(const Statevector& s, const PauliHamiltonian& h);

struct BitstringCounts {
  int n_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // outcome index -> count
};

// Computational-basis measurement record: `shots` i.i.d. draws from
// |amplitude|^2, aggregated per outcome. Deterministic given the seed.
BitstringCounts sample_bitstrings(const Statevector& s, std::uint64_t shots, SplitMix64& rng);
BitstringCounts sample_bitstrings(const Statevector& s, std::uint64_t shots, std::uint64_t seed);

// Unbiased shot-based estimate of <P>: rotate to the eigenbasis of P, draw
// the +1/-1 outcome tally, return the mean.
double sampled_expectation_pauli(const Statevector& s, const PauliString& p,
                                 std::uint64_t shots, SplitMix64& rng);
double sampled_expectation_pauli(const Statevector& s, const PauliString& p,
                                 std::uint64_t shots, std::uint64_t seed);

// Probability that measuring P yields +1, i.e. the sufficient statistic the
// sampled estimators draw binomials from.
double pauli_plus_probability(const Statevector& s, const PauliString& p);

// Tensor product; `a` occupies the leading (most significant) qubits.
Statevector kron(const Statevector& a, const Statevector& b);

}  // namespace vqd
