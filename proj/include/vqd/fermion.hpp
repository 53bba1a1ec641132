#pragma once

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "vqd/ansatz.hpp"
#include "vqd/circuit.hpp"
#include "vqd/pauli.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

// Raw product of ladder operators; anti-commutation is handled by the
// Jordan-Wigner transform, not symbolically.
struct LadderOp {
  int orbital = 0;
  bool dagger = false;
};

struct FermionTerm {
  std::complex<double> coefficient;
  std::vector<LadderOp> ops;  // applied right-to-left, like matrix products
};

using FermionOperatorSum = std::vector<FermionTerm>;

// Standard Jordan-Wigner: a_p^dag -> (X_p - iY_p)/2 with a Z string on
// qubits < p. Result is canonicalized.
ComplexPauliSum jordan_wigner(const FermionOperatorSum& ops, int n_qubits);

// Generalized cluster amplitudes: singles t_p^q for p < q, doubles
// t_pq^rs for disjoint index pairs (all four indices distinct). For four
// spin orbitals this is the 6 + 3 independent parameters.
struct ClusterAmplitudes {
  int n_spin_orbitals = 0;
  std::map<std::pair<int, int>, double> singles;
  std::map<std::array<int, 4>, double> doubles;  // {p, q, r, s}: p<q, r<s

  static ClusterAmplitudes zeros(int n_spin_orbitals);
  static std::vector<std::pair<int, int>> singles_index_order(int n_spin_orbitals);
  static std::vector<std::array<int, 4>> doubles_index_order(int n_spin_orbitals);
  static int parameter_count(int n_spin_orbitals);

  // Deterministic flat layout: singles in lexicographic order, then doubles.
  static ClusterAmplitudes from_parameters(int n_spin_orbitals, std::span<const double> params);
  std::vector<double> to_parameters() const;
};

// Jordan-Wigner image of T - T^dag; every coefficient is purely imaginary.
ComplexPauliSum uccgsd_generator(const ClusterAmplitudes& t);

// Occupied-first reference: the first n_electrons qubits set to 1.
Statevector hartree_fock_state(int n_qubits, int n_electrons);

// Reference preparation circuit (X on the occupied qubits).
Circuit hartree_fock_circuit(int n_qubits, int n_electrons);

// HF preparation followed by one first-order Trotter step of exp(T - T^dag),
// one PauliExp gate per generator term in lexicographic word order. With
// exact_exponential the Trotter step is replaced by the exact exponential
// applied at statevector level.
Circuit build_ansatz_circuit(const ClusterAmplitudes& t, int n_electrons,
                             bool exact_exponential = false);

// Occupation-number symmetries, diagonal in the computational basis under
// JW. Spin layout is interleaved: orbital o with spin sigma sits on qubit
// 2o + sigma, so up spins occupy even qubit positions.
enum class SymmetryKind { ElectronCount, SpinUpCount, SpinDownCount };

// Qubit positions contributing to the count.
std::uint64_t symmetry_mask(int n_qubits, SymmetryKind kind);

// Occupation count of a measured bitstring (index convention of
// Statevector: qubit 0 = MSB).
int electrons_in_bitstring(std::uint64_t bits, int n_qubits, SymmetryKind kind);

// Exact expectation of the symmetry counter on a state.
double symmetry_expectation(const Statevector& s, SymmetryKind kind);

class UccgsdAnsatz : public Ansatz {
 public:
  UccgsdAnsatz(int n_spin_orbitals, int n_electrons, bool exact_exponential = false);

  int n_qubits() const override { return n_spin_orbitals_; }
  int n_params() const override;
  Circuit circuit(std::span<const double> params) const override;

  bool has_reference_split() const override { return true; }
  Statevector reference_state() const override;
  Circuit post_reference_circuit(std::span<const double> params) const override;

  int n_electrons() const { return n_electrons_; }

 private:
  int n_spin_orbitals_;
  int n_electrons_;
  bool exact_exponential_;
};

}  // namespace vqd
