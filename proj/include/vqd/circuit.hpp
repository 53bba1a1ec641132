#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vqd/pauli.hpp"
#include "vqd/statevector.hpp"

namespace vqd {

// One gate. PauliExp(theta, P) is exp(-i*theta/2 * P) applied directly to
// the statevector; PauliExpSum applies exp(scale * sum) for an
// anti-Hermitian complex Pauli sum (used by the exact-exponential ansatz).
struct Gate {
  enum class Kind { H, X, Y, Z, S, Sdg, Cnot, Rx, Ry, Rz, PauliExp, PauliExpSum };

  Kind kind = Kind::H;
  int target = 0;
  int control = -1;  // CNOT only
  double theta = 0.0;
  PauliString pauli;
  std::shared_ptr<const ComplexPauliSum> sum;
  double scale = 1.0;  // PauliExpSum only

  static Gate h(int q) { return {Kind::H, q}; }
  static Gate x(int q) { return {Kind::X, q}; }
  static Gate y(int q) { return {Kind::Y, q}; }
  static Gate z(int q) { return {Kind::Z, q}; }
  static Gate s(int q) { return {Kind::S, q}; }
  static Gate sdg(int q) { return {Kind::Sdg, q}; }
  static Gate cnot(int control, int target) { return {Kind::Cnot, target, control}; }
  static Gate rx(int q, double theta) { return {Kind::Rx, q, -1, theta}; }
  static Gate ry(int q, double theta) { return {Kind::Ry, q, -1, theta}; }
  static Gate rz(int q, double theta) { return {Kind::Rz, q, -1, theta}; }
  static Gate pauli_exp(double theta, PauliString p) {
    Gate g{Kind::PauliExp, 0, -1, theta};
    g.pauli = std::move(p);
    return g;
  }
  static Gate pauli_exp_sum(std::shared_ptr<const ComplexPauliSum> terms, double scale) {
    Gate g{Kind::PauliExpSum};
    g.sum = std::move(terms);
    g.scale = scale;
    return g;
  }

  Gate inverse() const;
  int max_qubit() const;
};

// Ordered gate list. inverse() reverses the order and inverts every gate,
// so circuit followed by inverse is the identity.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void append(Gate g);
  void append(const Circuit& other);
  Circuit inverse() const;
};

void apply_gate(const Gate& g, Statevector& s);
void apply_circuit(const Circuit& c, Statevector& s);

// U_c |psi> as a fresh value.
Statevector apply_circuit_copy(const Circuit& c, const Statevector& s);

// U_c |0...0>.
Statevector prepare_state(const Circuit& c);

}  // namespace vqd
