#include "vqd/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace vqd {

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case Kind::H:
    case Kind::X:
    case Kind::Y:
    case Kind::Z:
    case Kind::Cnot:
      break;  // self-inverse
    case Kind::S: g.kind = Kind::Sdg; break;
    case Kind::Sdg: g.kind = Kind::S; break;
    case Kind::Rx:
    case Kind::Ry:
    case Kind::Rz:
    case Kind::PauliExp:
      g.theta = -theta;
      break;
    case Kind::PauliExpSum: g.scale = -scale; break;
  }
  return g;
}

int Gate::max_qubit() const {
  int m = target;
  if (control > m) m = control;
  if (kind == Kind::PauliExp) m = std::max(m, pauli.n_qubits() - 1);
  if (kind == Kind::PauliExpSum && sum && !sum->empty()) {
    m = std::max(m, sum->front().word.n_qubits() - 1);
  }
  return m;
}

void Circuit::append(Gate g) {
  if (g.max_qubit() >= n_qubits || g.target < 0) {
    throw std::invalid_argument("gate qubit index out of range");
  }
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits) throw std::invalid_argument("circuit qubit count mismatch");
  for (const auto& g : other.gates) gates.push_back(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits);
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) inv.gates.push_back(it->inverse());
  return inv;
}

namespace {

// Visit amplitude pairs split by the target qubit's bit.
template <typename F>
void for_each_pair(Statevector& s, int qubit, F&& f) {
  const std::uint64_t bit = qubit_bit(s.n_qubits, qubit);
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    if (i & bit) continue;
    f(s.amplitudes[i], s.amplitudes[i | bit]);
  }
}

// |psi> += exp(B) |psi> via scaling-and-squaring Taylor application, where
// B = scale * sum is anti-Hermitian. Cheap at simulator scales and exact to
// machine precision.
void apply_exp_pauli_sum(const ComplexPauliSum& sum, double scale, Statevector& s) {
  double norm1 = 0.0;
  for (const auto& t : sum) norm1 += std::abs(t.coefficient);
  norm1 *= std::abs(scale);
  int squarings = 0;
  while (norm1 > 0.5 && squarings < 60) {
    norm1 *= 0.5;
    ++squarings;
  }
  const double step = scale / static_cast<double>(1ull << squarings);

  auto apply_b = [&](const Statevector& in, Statevector& out) {
    for (auto& a : out.amplitudes) a = 0.0;
    Statevector tmp(in.n_qubits);
    for (const auto& t : sum) {
      tmp = in;
      apply_pauli(t.word, tmp);
      const Amplitude c = t.coefficient * step;
      for (std::size_t i = 0; i < out.dim(); ++i) out.amplitudes[i] += c * tmp.amplitudes[i];
    }
  };

  Statevector term(s.n_qubits), next(s.n_qubits);
  for (int rep = 0; rep < (1 << squarings); ++rep) {
    Statevector acc = s;
    term = s;
    for (int j = 1; j < 60; ++j) {
      apply_b(term, next);
      double tn = 0.0;
      for (std::size_t i = 0; i < next.dim(); ++i) {
        next.amplitudes[i] /= static_cast<double>(j);
        acc.amplitudes[i] += next.amplitudes[i];
        tn += std::norm(next.amplitudes[i]);
      }
      term = next;
      if (tn < 1e-32) break;
    }
    s = std::move(acc);
  }
}

}  // namespace

void apply_gate(const Gate& g, Statevector& s) {
  using K = Gate::Kind;
  const std::complex<double> im(0.0, 1.0);
  switch (g.kind) {
    case K::H: {
      const double r = 0.70710678118654752440;
      for_each_pair(s, g.target, [&](Amplitude& a0, Amplitude& a1) {
        Amplitude t0 = a0, t1 = a1;
        a0 = (t0 + t1) * r;
        a1 = (t0 - t1) * r;
      });
      break;
    }
    case K::X:
      for_each_pair(s, g.target, [](Amplitude& a0, Amplitude& a1) { std::swap(a0, a1); });
      break;
    case K::Y:
      for_each_pair(s, g.target, [&](Amplitude& a0, Amplitude& a1) {
        Amplitude t0 = a0;
        a0 = -im * a1;
        a1 = im * t0;
      });
      break;
    case K::Z:
      for_each_pair(s, g.target, [](Amplitude&, Amplitude& a1) { a1 = -a1; });
      break;
    case K::S:
      for_each_pair(s, g.target, [&](Amplitude&, Amplitude& a1) { a1 *= im; });
      break;
    case K::Sdg:
      for_each_pair(s, g.target, [&](Amplitude&, Amplitude& a1) { a1 *= -im; });
      break;
    case K::Cnot: {
      const std::uint64_t cbit = qubit_bit(s.n_qubits, g.control);
      const std::uint64_t tbit = qubit_bit(s.n_qubits, g.target);
      for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(s.amplitudes[i], s.amplitudes[i | tbit]);
      }
      break;
    }
    case K::Rx: {
      const double c = std::cos(g.theta / 2), sn = std::sin(g.theta / 2);
      for_each_pair(s, g.target, [&](Amplitude& a0, Amplitude& a1) {
        Amplitude t0 = a0, t1 = a1;
        a0 = c * t0 - im * sn * t1;
        a1 = c * t1 - im * sn * t0;
      });
      break;
    }
    case K::Ry: {
      const double c = std::cos(g.theta / 2), sn = std::sin(g.theta / 2);
      for_each_pair(s, g.target, [&](Amplitude& a0, Amplitude& a1) {
        Amplitude t0 = a0, t1 = a1;
        a0 = c * t0 - sn * t1;
        a1 = c * t1 + sn * t0;
      });
      break;
    }
    case K::Rz: {
      const Amplitude e0 = std::exp(-im * (g.theta / 2));
      const Amplitude e1 = std::exp(im * (g.theta / 2));
      for_each_pair(s, g.target, [&](Amplitude& a0, Amplitude& a1) {
        a0 *= e0;
        a1 *= e1;
      });
      break;
    }
    case K::PauliExp: {
      // exp(-i theta/2 P) |psi> = cos(theta/2)|psi> - i sin(theta/2) P|psi>
      if (s.n_qubits != g.pauli.n_qubits()) {
        throw std::invalid_argument("PauliExp word length mismatch");
      }
      const double c = std::cos(g.theta / 2), sn = std::sin(g.theta / 2);
      Statevector ps = s;
      apply_pauli(g.pauli, ps);
      for (std::size_t i = 0; i < s.dim(); ++i) {
        s.amplitudes[i] = c * s.amplitudes[i] - im * sn * ps.amplitudes[i];
      }
      break;
    }
    case K::PauliExpSum:
      if (!g.sum) throw std::invalid_argument("PauliExpSum gate without terms");
      apply_exp_pauli_sum(*g.sum, g.scale, s);
      break;
  }
}

void apply_circuit(const Circuit& c, Statevector& s) {
  if (c.n_qubits != s.n_qubits) throw std::invalid_argument("circuit/state qubit count mismatch");
  for (const auto& g : c.gates) apply_gate(g, s);
}

Statevector apply_circuit_copy(const Circuit& c, const Statevector& s) {
  Statevector out = s;
  apply_circuit(c, out);
  return out;
}

Statevector prepare_state(const Circuit& c) {
  Statevector s = Statevector::zero_state(c.n_qubits);
  apply_circuit(c, s);
  return s;
}

}  // namespace vqd
