#include "vqd/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vqd {

Statevector Statevector::zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

Statevector Statevector::basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits <= 0 || n_qubits > 24) throw std::invalid_argument("unsupported qubit count");
  Statevector s(n_qubits);
  if (index >= s.dim()) throw std::invalid_argument("basis state index out of range");
  s.amplitudes[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  return std::sqrt(n2);
}

std::string index_to_bitstring(int n_qubits, std::uint64_t index) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (index & qubit_bit(n_qubits, q)) s[q] = '1';
  }
  return s;
}

std::complex<double> inner_product(const Statevector& a, const Statevector& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("statevector size mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return acc;
}

namespace {

void check_match(const Statevector& s, const PauliString& p) {
  if (s.n_qubits != p.n_qubits()) throw std::invalid_argument("Pauli word length mismatch");
}

// Per-basis-state phase of P|i>: P maps |i> to phase * |i ^ flip> with
// phase = i^{#Y} * (-1)^{popcount(i & (y|z))}.
inline Amplitude pauli_phase(const PauliMasks& m, std::uint64_t i, int y_count) {
  static constexpr Amplitude i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int sign = std::popcount(i & m.phase()) & 1;
  Amplitude ph = i_pow[y_count & 3];
  return sign ? -ph : ph;
}

}  // namespace

void apply_pauli(const PauliString& p, Statevector& s) {
  check_match(s, p);
  const PauliMasks m = make_masks(p);
  const int y_count = std::popcount(m.y);
  const std::uint64_t flip = m.flip();
  std::vector<Amplitude> out(s.dim());
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    out[i ^ flip] = pauli_phase(m, i, y_count) * s.amplitudes[i];
  }
  s.amplitudes = std::move(out);
}

double expectation_pauli(const Statevector& s, const PauliString& p) {
  check_match(s, p);
  const PauliMasks m = make_masks(p);
  const int y_count = std::popcount(m.y);
  const std::uint64_t flip = m.flip();
  std::complex<double> acc = 0.0;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    acc += std::conj(s.amplitudes[i ^ flip]) * pauli_phase(m, i, y_count) * s.amplitudes[i];
  }
  return acc.real();
}

double expectation_hamiltonian(const Statevector& s, const PauliHamiltonian& h) {
  if (s.n_qubits != h.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coefficient * expectation_pauli(s, t.word);
  return e;
}

BitstringCounts sample_bitstrings(const Statevector& s, std::uint64_t shots, SplitMix64& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> probs(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) probs[i] = std::norm(s.amplitudes[i]);
  auto raw = multinomial(rng, shots, probs);
  BitstringCounts out;
  out.n_qubits = s.n_qubits;
  out.shots = shots;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] > 0) out.counts[i] = raw[i];
  }
  return out;
}

BitstringCounts sample_bitstrings(const Statevector& s, std::uint64_t shots, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_bitstrings(s, shots, rng);
}

double pauli_plus_probability(const Statevector& s, const PauliString& p) {
  check_match(s, p);
  const PauliMasks m = make_masks(p);
  // Rotate each X/Y qubit into the Z basis, then +1 outcomes are the basis
  // states with even parity on the support.
  Statevector rot = s;
  for (int q = 0; q < s.n_qubits; ++q) {
    const char op = p.op(q);
    if (op != 'X' && op != 'Y') continue;
    const std::uint64_t bit = qubit_bit(s.n_qubits, q);
    const double inv_sqrt2 = 0.70710678118654752440;
    for (std::uint64_t i = 0; i < rot.dim(); ++i) {
      if (i & bit) continue;
      Amplitude a0 = rot.amplitudes[i];
      Amplitude a1 = rot.amplitudes[i | bit];
      if (op == 'Y') a1 *= Amplitude(0, -1);  // S-dagger before H
      rot.amplitudes[i] = (a0 + a1) * inv_sqrt2;
      rot.amplitudes[i | bit] = (a0 - a1) * inv_sqrt2;
    }
  }
  const std::uint64_t support = m.support();
  double p_plus = 0.0;
  for (std::uint64_t i = 0; i < rot.dim(); ++i) {
    if ((std::popcount(i & support) & 1) == 0) p_plus += std::norm(rot.amplitudes[i]);
  }
  return std::min(p_plus, 1.0);
}

double sampled_expectation_pauli(const Statevector& s, const PauliString& p,
                                 std::uint64_t shots, SplitMix64& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (p.is_identity()) return 1.0;
  const double p_plus = pauli_plus_probability(s, p);
  const std::uint64_t plus = binomial(rng, shots, p_plus);
  return (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

double sampled_expectation_pauli(const Statevector& s, const PauliString& p,
                                 std::uint64_t shots, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sampled_expectation_pauli(s, p, shots, rng);
}

Statevector kron(const Statevector& a, const Statevector& b) {
  Statevector out(a.n_qubits + b.n_qubits);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out.amplitudes[(i << b.n_qubits) | j] = a.amplitudes[i] * b.amplitudes[j];
    }
  }
  return out;
}

}  // namespace vqd
