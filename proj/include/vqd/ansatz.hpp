#pragma once

#include <span>

#include "vqd/circuit.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

// A parameterized state-preparation family R(lambda). Circuit-backed
// families support the shot-based overlap estimators; prepare() alone is
// enough for exact-mode objectives.
class Ansatz {
 public:
  virtual ~Ansatz() = default;

  virtual int n_qubits() const = 0;
  virtual int n_params() const = 0;
  virtual Circuit circuit(std::span<const double> params) const = 0;
  virtual Statevector prepare(std::span<const double> params) const;

  // Families of the form V(lambda) * R_ref expose the split so the
  // symmetry-filtered overlap estimator can measure in the reference frame.
  virtual bool has_reference_split() const { return false; }
  virtual Statevector reference_state() const;
  virtual Circuit post_reference_circuit(std::span<const double> params) const;
};

// Layered Ry/Rz rotations with a CNOT chain between layers. Expressive
// enough to serve as a generic ansatz on a few qubits.
class HardwareEfficientAnsatz : public Ansatz {
 public:
  HardwareEfficientAnsatz(int n_qubits, int layers);

  int n_qubits() const override { return n_qubits_; }
  int n_params() const override { return 2 * n_qubits_ * (layers_ + 1); }
  Circuit circuit(std::span<const double> params) const override;

 private:
  int n_qubits_;
  int layers_;
};

// Maximally expressive family for oracle-style exact-mode runs: parameters
// are the raw real and imaginary amplitude components, normalized on
// preparation. Has no circuit realisation, so it cannot back the sampling
// estimators.
class RawStateAnsatz : public Ansatz {
 public:
  explicit RawStateAnsatz(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const override { return n_qubits_; }
  int n_params() const override { return 2 * (1 << n_qubits_); }
  Circuit circuit(std::span<const double> params) const override;
  Statevector prepare(std::span<const double> params) const override;

 private:
  int n_qubits_;
};

}  // namespace vqd
