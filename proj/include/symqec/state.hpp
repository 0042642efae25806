#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symqec/coeff.hpp"

namespace symqec {

inline constexpr int kMaxQubits = 24;

// One computational basis label e[x1,...,xn]; position 1 is the leftmost
// qubit. Packed so that index() reads the bit string as a big-endian
// integer (qubit 1 = most significant bit).
class Ket {
 public:
  explicit Ket(std::span<const int> bits);
  Ket(std::initializer_list<int> bits)
      : Ket(std::span<const int>(bits.begin(), bits.size())) {}

  static Ket from_string(std::string_view bits);  // e.g. "010"
  static Ket from_index(int n, uint32_t index);

  int size() const { return static_cast<int>(n_); }
  int bit(int position) const;  // 1-based
  Ket with_bit(int position, int value) const;
  uint32_t index() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Ket&, const Ket&) = default;
  friend auto operator<=>(const Ket&, const Ket&) = default;

 private:
  Ket(uint32_t n, uint32_t bits) : n_(n), bits_(bits) {}

  uint32_t n_;
  uint32_t bits_;
};

// Symbolic n-qubit state: canonical mapping from basis kets to nonzero
// polynomial coefficients. Always flat (kets are plain bit strings) and
// collected; the zero state is the empty map.
class State {
 public:
  explicit State(int num_qubits);
  static State basis(const Ket& ket);

  int qubits() const { return n_; }
  const std::map<Ket, CoeffExpr>& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of a ket; zero when absent. Width-checked.
  CoeffExpr coeff(const Ket& ket) const;

  State scaled(const CoeffExpr& factor) const;

  // Accumulates coefficient onto a ket, keeping the map canonical
  // (zero results are dropped). Width-checked.
  void add_term(const Ket& ket, const CoeffExpr& coeff);

  // Symbols occurring in any coefficient, sorted by name.
  std::vector<SymbolId> symbols() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  int n_;
  std::map<Ket, CoeffExpr> terms_;
};

State ket_state(std::span<const int> bits);
State ket_state(std::initializer_list<int> bits);
State ket_state(std::string_view bits);

// Coefficient-weighted sum; all parts must share one qubit count.
State superpose(const std::vector<std::pair<CoeffExpr, State>>& parts);

// Bilinear tensor product; the result is flat by construction.
State tensor(const State& a, const State& b);

// Exact equality of canonical term maps.
bool states_equal(const State& a, const State& b);

// True iff a = lambda * b for some nonzero (possibly symbolic) factor.
// Decided without division: supports must coincide and all pairwise cross
// products a[k]*b[m] = a[m]*b[k] must hold exactly.
bool phase_equivalent(const State& a, const State& b);

// Numeric 2-norm squared under a symbol binding.
double norm_sq(const State& s, const Env& env);

}  // namespace symqec
