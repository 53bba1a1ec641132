#include "vqd/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace vqd {

namespace {

bool valid_pauli_char(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

}  // namespace

PauliString::PauliString(std::string word) : word_(std::move(word)) {
  for (char c : word_) {
    if (!valid_pauli_char(c)) {
      throw std::invalid_argument("invalid Pauli character '" + std::string(1, c) +
                                  "' in word \"" + word_ + "\"");
    }
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(std::string(static_cast<std::size_t>(n_qubits), 'I'));
}

bool PauliString::is_identity() const {
  return word_.find_first_not_of('I') == std::string::npos;
}

PauliMasks make_masks(const PauliString& p) {
  PauliMasks m;
  const int n = p.n_qubits();
  for (int q = 0; q < n; ++q) {
    std::uint64_t bit = qubit_bit(n, q);
    switch (p.op(q)) {
      case 'X': m.x |= bit; break;
      case 'Y': m.y |= bit; break;
      case 'Z': m.z |= bit; break;
      default: break;
    }
  }
  return m;
}

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("qubit count must be positive");
  std::map<std::string, double> merged;
  for (const auto& t : terms) {
    if (t.word.n_qubits() != n_qubits) {
      throw std::invalid_argument("Pauli word \"" + t.word.word() + "\" has length " +
                                  std::to_string(t.word.n_qubits()) + ", expected " +
                                  std::to_string(n_qubits));
    }
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("non-finite coefficient for word \"" + t.word.word() + "\"");
    }
    merged[t.word.word()] += t.coefficient;
  }
  for (const auto& [word, c] : merged) {
    if (c == 0.0) continue;
    terms_.push_back({c, PauliString(word)});
  }
}

bool operator==(const PauliHamiltonian& a, const PauliHamiltonian& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient ||
        a.terms_[i].word != b.terms_[i].word) {
      return false;
    }
  }
  return true;
}

double coefficient_norm(const PauliHamiltonian& h) {
  double s = 0.0;
  for (const auto& t : h.terms()) s += std::abs(t.coefficient);
  return s;
}

double spectral_range_bound(const PauliHamiltonian& h) { return 2.0 * coefficient_norm(h); }

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_error(int line_no, const std::string& what) {
  throw std::runtime_error("Hamiltonian parse error, line " + std::to_string(line_no) + ": " +
                           what);
}

}  // namespace

PauliHamiltonian parse_hamiltonian(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<PauliTerm> terms;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n_qubits < 0) {
      std::string kw;
      fields >> kw >> n_qubits;
      if (kw != "qubits" || fields.fail() || n_qubits <= 0) {
        parse_error(line_no, "expected \"qubits N\" header, got \"" + line + "\"");
      }
      std::string rest;
      if (fields >> rest) parse_error(line_no, "trailing content after qubit count");
      continue;
    }
    std::string coeff_str, word_str, rest;
    fields >> coeff_str >> word_str;
    if (fields.fail() || (fields >> rest)) {
      parse_error(line_no, "expected \"<coefficient> <word>\", got \"" + line + "\"");
    }
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(coeff_str.data(), coeff_str.data() + coeff_str.size(), c);
    if (ec != std::errc{} || ptr != coeff_str.data() + coeff_str.size()) {
      parse_error(line_no, "bad coefficient \"" + coeff_str + "\"");
    }
    if (!std::isfinite(c)) parse_error(line_no, "non-finite coefficient \"" + coeff_str + "\"");
    if (static_cast<int>(word_str.size()) != n_qubits) {
      parse_error(line_no, "word length " + std::to_string(word_str.size()) + " != " +
                               std::to_string(n_qubits));
    }
    for (char ch : word_str) {
      if (!valid_pauli_char(ch)) parse_error(line_no, "bad Pauli word \"" + word_str + "\"");
    }
    terms.push_back({c, PauliString(word_str)});
  }
  if (n_qubits < 0) throw std::runtime_error("Hamiltonian parse error: missing \"qubits N\" header");
  return PauliHamiltonian(n_qubits, std::move(terms));
}

std::string serialize_hamiltonian(const PauliHamiltonian& h) {
  std::string out = "qubits " + std::to_string(h.n_qubits()) + "\n";
  char buf[64];
  for (const auto& t : h.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
    out += buf;
    out += ' ';
    out += t.word.word();
    out += '\n';
  }
  return out;
}

std::map<std::string, std::string> read_hamiltonian_metadata(const std::string& text) {
  std::map<std::string, std::string> meta;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string hash, kw, key;
    fields >> hash >> kw >> key;
    if (hash != "#" || kw != "meta" || fields.fail()) continue;
    std::string value;
    std::getline(fields, value);
    std::size_t a = value.find_first_not_of(" \t");
    meta[key] = a == std::string::npos ? "" : value.substr(a);
  }
  return meta;
}

std::pair<std::complex<double>, PauliString> multiply_words(const PauliString& a,
                                                            const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli word length mismatch in product");
  }
  static constexpr std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  // Single-qubit products: result char and power of i, with I=0,X=1,Y=2,Z=3.
  auto code = [](char c) { return c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3; };
  static constexpr char chars[4] = {'I', 'X', 'Y', 'Z'};
  int phase = 0;
  std::string word(a.word());
  for (int q = 0; q < a.n_qubits(); ++q) {
    int ca = code(a.op(q)), cb = code(b.op(q));
    if (ca == 0) { word[q] = b.op(q); continue; }
    if (cb == 0) { word[q] = a.op(q); continue; }
    if (ca == cb) { word[q] = 'I'; continue; }
    // XY=iZ, YZ=iX, ZX=iY and the reversed products pick up -i.
    int cr = 6 - ca - cb;
    bool cyclic = (cb - ca + 3) % 3 == 1;
    phase = (phase + (cyclic ? 1 : 3)) % 4;
    word[q] = chars[cr];
  }
  return {i_pow[phase], PauliString(word)};
}

ComplexPauliSum canonicalize(const ComplexPauliSum& sum) {
  std::map<std::string, std::complex<double>> merged;
  for (const auto& t : sum) merged[t.word.word()] += t.coefficient;
  ComplexPauliSum out;
  for (const auto& [word, c] : merged) {
    if (std::abs(c) < 1e-14) continue;
    out.push_back({c, PauliString(word)});
  }
  return out;
}

}  // namespace vqd
