#include "vqd/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace vqd {

namespace {

// JW image of a single ladder operator: (X -+ iY)/2 with the parity string.
ComplexPauliSum jw_ladder(const LadderOp& op, int n_qubits) {
  if (op.orbital < 0 || op.orbital >= n_qubits) {
    throw std::invalid_argument("orbital index " + std::to_string(op.orbital) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  std::string base(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < op.orbital; ++q) base[q] = 'Z';
  std::string wx = base, wy = base;
  wx[op.orbital] = 'X';
  wy[op.orbital] = 'Y';
  const std::complex<double> iy(0.0, op.dagger ? -0.5 : 0.5);
  return {{{0.5, 0.0}, PauliString(wx)}, {iy, PauliString(wy)}};
}

}  // namespace

ComplexPauliSum jordan_wigner(const FermionOperatorSum& ops, int n_qubits) {
  ComplexPauliSum total;
  for (const auto& term : ops) {
    ComplexPauliSum acc = {{term.coefficient, PauliString::identity(n_qubits)}};
    for (const auto& ladder : term.ops) {
      const ComplexPauliSum factor = jw_ladder(ladder, n_qubits);
      ComplexPauliSum next;
      next.reserve(acc.size() * factor.size());
      for (const auto& a : acc) {
        for (const auto& f : factor) {
          auto [phase, word] = multiply_words(a.word, f.word);
          next.push_back({a.coefficient * f.coefficient * phase, std::move(word)});
        }
      }
      acc = std::move(next);
    }
    total.insert(total.end(), acc.begin(), acc.end());
  }
  return canonicalize(total);
}

ClusterAmplitudes ClusterAmplitudes::zeros(int n_spin_orbitals) {
  ClusterAmplitudes t;
  t.n_spin_orbitals = n_spin_orbitals;
  for (auto idx : singles_index_order(n_spin_orbitals)) t.singles[idx] = 0.0;
  for (auto idx : doubles_index_order(n_spin_orbitals)) t.doubles[idx] = 0.0;
  return t;
}

std::vector<std::pair<int, int>> ClusterAmplitudes::singles_index_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) out.emplace_back(p, q);
  }
  return out;
}

std::vector<std::array<int, 4>> ClusterAmplitudes::doubles_index_order(int n) {
  // Unordered pairs of disjoint index pairs; each pairing counted once.
  std::vector<std::array<int, 4>> out;
  auto pairs = singles_index_order(n);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [p, q] = pairs[a];
      auto [r, s] = pairs[b];
      if (p == r || p == s || q == r || q == s) continue;
      out.push_back({p, q, r, s});
    }
  }
  return out;
}

int ClusterAmplitudes::parameter_count(int n) {
  return static_cast<int>(singles_index_order(n).size() + doubles_index_order(n).size());
}

ClusterAmplitudes ClusterAmplitudes::from_parameters(int n, std::span<const double> params) {
  if (static_cast<int>(params.size()) != parameter_count(n)) {
    throw std::invalid_argument("parameter count mismatch");
  }
  ClusterAmplitudes t;
  t.n_spin_orbitals = n;
  std::size_t i = 0;
  for (auto idx : singles_index_order(n)) t.singles[idx] = params[i++];
  for (auto idx : doubles_index_order(n)) t.doubles[idx] = params[i++];
  return t;
}

std::vector<double> ClusterAmplitudes::to_parameters() const {
  std::vector<double> out;
  for (auto idx : singles_index_order(n_spin_orbitals)) out.push_back(singles.at(idx));
  for (auto idx : doubles_index_order(n_spin_orbitals)) out.push_back(doubles.at(idx));
  return out;
}

ComplexPauliSum uccgsd_generator(const ClusterAmplitudes& t) {
  FermionOperatorSum generator;
  for (const auto& [idx, amp] : t.singles) {
    if (!std::isfinite(amp)) throw std::invalid_argument("non-finite amplitude");
    if (amp == 0.0) continue;
    auto [p, q] = idx;
    // t (a_q^dag a_p - a_p^dag a_q)
    generator.push_back({amp, {{q, true}, {p, false}}});
    generator.push_back({-amp, {{p, true}, {q, false}}});
  }
  for (const auto& [idx, amp] : t.doubles) {
    if (!std::isfinite(amp)) throw std::invalid_argument("non-finite amplitude");
    if (amp == 0.0) continue;
    auto [p, q, r, s] = idx;
    // t (a_r^dag a_s^dag a_p a_q - a_q^dag a_p^dag a_s a_r)
    generator.push_back({amp, {{r, true}, {s, true}, {p, false}, {q, false}}});
    generator.push_back({-amp, {{q, true}, {p, true}, {s, false}, {r, false}}});
  }
  return jordan_wigner(generator, t.n_spin_orbitals);
}

Statevector hartree_fock_state(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits) {
    throw std::invalid_argument("invalid electron count");
  }
  std::uint64_t index = 0;
  for (int q = 0; q < n_electrons; ++q) index |= qubit_bit(n_qubits, q);
  return Statevector::basis_state(n_qubits, index);
}

Circuit hartree_fock_circuit(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits) {
    throw std::invalid_argument("invalid electron count");
  }
  Circuit c(n_qubits);
  for (int q = 0; q < n_electrons; ++q) c.append(Gate::x(q));
  return c;
}

namespace {

// Trotter gates for exp(G), one PauliExp per term. G is anti-Hermitian so
// every coefficient is purely imaginary; exp(i*w*P) = PauliExp(-2w, P).
void append_generator_gates(Circuit& c, const ComplexPauliSum& generator,
                            bool exact_exponential) {
  if (generator.empty()) return;
  if (exact_exponential) {
    c.append(Gate::pauli_exp_sum(std::make_shared<const ComplexPauliSum>(generator), 1.0));
    return;
  }
  for (const auto& term : generator) {
    if (std::abs(term.coefficient.real()) > 1e-10) {
      throw std::logic_error("generator coefficient not purely imaginary");
    }
    c.append(Gate::pauli_exp(-2.0 * term.coefficient.imag(), term.word));
  }
}

}  // namespace

Circuit build_ansatz_circuit(const ClusterAmplitudes& t, int n_electrons,
                             bool exact_exponential) {
  Circuit c = hartree_fock_circuit(t.n_spin_orbitals, n_electrons);
  append_generator_gates(c, uccgsd_generator(t), exact_exponential);
  return c;
}

std::uint64_t symmetry_mask(int n_qubits, SymmetryKind kind) {
  std::uint64_t mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const bool up = q % 2 == 0;
    if (kind == SymmetryKind::ElectronCount || (kind == SymmetryKind::SpinUpCount && up) ||
        (kind == SymmetryKind::SpinDownCount && !up)) {
      mask |= qubit_bit(n_qubits, q);
    }
  }
  return mask;
}

int electrons_in_bitstring(std::uint64_t bits, int n_qubits, SymmetryKind kind) {
  return std::popcount(bits & symmetry_mask(n_qubits, kind));
}

double symmetry_expectation(const Statevector& s, SymmetryKind kind) {
  const std::uint64_t mask = symmetry_mask(s.n_qubits, kind);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    acc += std::norm(s.amplitudes[i]) * static_cast<double>(std::popcount(i & mask));
  }
  return acc;
}

UccgsdAnsatz::UccgsdAnsatz(int n_spin_orbitals, int n_electrons, bool exact_exponential)
    : n_spin_orbitals_(n_spin_orbitals),
      n_electrons_(n_electrons),
      exact_exponential_(exact_exponential) {
  if (n_electrons < 0 || n_electrons > n_spin_orbitals) {
    throw std::invalid_argument("invalid electron count");
  }
}

int UccgsdAnsatz::n_params() const {
  return ClusterAmplitudes::parameter_count(n_spin_orbitals_);
}

Circuit UccgsdAnsatz::circuit(std::span<const double> params) const {
  return build_ansatz_circuit(ClusterAmplitudes::from_parameters(n_spin_orbitals_, params),
                              n_electrons_, exact_exponential_);
}

Statevector UccgsdAnsatz::reference_state() const {
  return hartree_fock_state(n_spin_orbitals_, n_electrons_);
}

Circuit UccgsdAnsatz::post_reference_circuit(std::span<const double> params) const {
  Circuit c(n_spin_orbitals_);
  append_generator_gates(
      c, uccgsd_generator(ClusterAmplitudes::from_parameters(n_spin_orbitals_, params)),
      exact_exponential_);
  return c;
}

}  // namespace vqd
