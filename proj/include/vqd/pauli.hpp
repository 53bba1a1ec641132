#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vqd {

// Tensor product of single-qubit Paulis, stored as a word over {I,X,Y,Z}
// with qubit 0 leftmost. Length always equals the qubit count of whatever
// operator owns the string; the all-I word is a valid identity term.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string word);
  static PauliString identity(int n_qubits);

  int n_qubits() const { return static_cast<int>(word_.size()); }
  const std::string& word() const { return word_; }
  char op(int qubit) const { return word_[static_cast<std::size_t>(qubit)]; }
  bool is_identity() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) = default;

 private:
  std::string word_;
};

// Bitmask view of a Pauli word against the statevector index convention
// (qubit 0 = most significant bit).
struct PauliMasks {
  std::uint64_t x = 0;  // qubits carrying X
  std::uint64_t y = 0;  // qubits carrying Y
  std::uint64_t z = 0;  // qubits carrying Z
  std::uint64_t flip() const { return x | y; }
  std::uint64_t phase() const { return y | z; }
  std::uint64_t support() const { return x | y | z; }
};

PauliMasks make_masks(const PauliString& p);

// Mask with the bit of a single qubit set (qubit 0 = MSB).
inline std::uint64_t qubit_bit(int n_qubits, int qubit) {
  return 1ull << (n_qubits - 1 - qubit);
}

struct PauliTerm {
  double coefficient = 0.0;
  PauliString word;
};

// Real-weighted Pauli sum in canonical form: terms sorted lexicographically
// by word, duplicates merged, exact zeros dropped. Immutable after
// construction, so instances can be shared freely across threads.
class PauliHamiltonian {
 public:
  PauliHamiltonian() = default;
  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t n_terms() const { return terms_.size(); }

  friend bool operator==(const PauliHamiltonian& a, const PauliHamiltonian& b);

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

// Sum of |c_j|.
double coefficient_norm(const PauliHamiltonian& h);

// 2 * sum |c_j|; always >= E_max - E_min.
double spectral_range_bound(const PauliHamiltonian& h);

// Text format: first non-comment line "qubits N", then one term per line as
// "<coefficient> <word>". '#' starts a comment anywhere on a line. Parse
// errors report the 1-based line number.
PauliHamiltonian parse_hamiltonian(const std::string& text);

// Canonical serialization: terms in stored (lexicographic) order,
// coefficients with 17 significant digits so parse(serialize(h)) == h.
std::string serialize_hamiltonian(const PauliHamiltonian& h);

// "# meta <key> <value>" comment lines, used for fixture provenance such as
// bond lengths and electron counts.
std::map<std::string, std::string> read_hamiltonian_metadata(const std::string& text);

// Complex-weighted Pauli sums: the internal currency of the Jordan-Wigner
// machinery. Never used to represent observables.
struct ComplexPauliTerm {
  std::complex<double> coefficient;
  PauliString word;
};
using ComplexPauliSum = std::vector<ComplexPauliTerm>;

// Product of two words: returns the resulting word and the i^k phase.
std::pair<std::complex<double>, PauliString> multiply_words(const PauliString& a,
                                                            const PauliString& b);

// Merge like terms, drop (near-)zeros, sort lexicographically by word.
ComplexPauliSum canonicalize(const ComplexPauliSum& sum);

}  // namespace vqd
