#include "vqd/ansatz.hpp"

#include <cmath>
#include <stdexcept>

namespace vqd {

Statevector Ansatz::prepare(std::span<const double> params) const {
  return prepare_state(circuit(params));
}

Statevector Ansatz::reference_state() const {
  throw std::logic_error("ansatz has no reference/post-reference split");
}

Circuit Ansatz::post_reference_circuit(std::span<const double>) const {
  throw std::logic_error("ansatz has no reference/post-reference split");
}

HardwareEfficientAnsatz::HardwareEfficientAnsatz(int n_qubits, int layers)
    : n_qubits_(n_qubits), layers_(layers) {
  if (n_qubits < 1 || layers < 0) throw std::invalid_argument("bad ansatz shape");
}

Circuit HardwareEfficientAnsatz::circuit(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != n_params()) {
    throw std::invalid_argument("parameter count mismatch");
  }
  Circuit c(n_qubits_);
  std::size_t p = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < n_qubits_; ++q) {
      c.append(Gate::ry(q, params[p++]));
      c.append(Gate::rz(q, params[p++]));
    }
  };
  rotation_layer();
  for (int l = 0; l < layers_; ++l) {
    for (int q = 0; q + 1 < n_qubits_; ++q) c.append(Gate::cnot(q, q + 1));
    rotation_layer();
  }
  return c;
}

Circuit RawStateAnsatz::circuit(std::span<const double>) const {
  throw std::logic_error("raw-state ansatz has no circuit realisation");
}

Statevector RawStateAnsatz::prepare(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != n_params()) {
    throw std::invalid_argument("parameter count mismatch");
  }
  Statevector s(n_qubits_);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    s.amplitudes[i] = {params[2 * i], params[2 * i + 1]};
    norm2 += std::norm(s.amplitudes[i]);
  }
  if (norm2 < 1e-24) throw std::invalid_argument("raw-state parameters are all zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : s.amplitudes) a *= inv;
  return s;
}

}  // namespace vqd
