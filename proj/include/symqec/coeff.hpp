#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symqec/scalar.hpp"

namespace symqec {

// Interned name of a formal commuting indeterminate. Names are unique per
// process; equal ids mean equal names.
struct SymbolId {
  uint32_t value;
  auto operator<=>(const SymbolId&) const = default;
};

SymbolId intern_symbol(std::string_view name);
const std::string& symbol_name(SymbolId id);

struct MonomialFactor {
  SymbolId symbol;
  uint32_t exponent;
  friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

// Sorted multiset of symbols with positive exponents; the empty monomial is
// the multiplicative unit (pure-number term).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(SymbolId s) : factors_{{s, 1}} {}

  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  const std::vector<MonomialFactor>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<MonomialFactor> factors_;
};

// Deterministic term order: lexicographic by symbol name, then exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Env = std::map<SymbolId, std::complex<double>>;

// Multivariate polynomial over Scalar in canonical collected form: no
// monomial maps to zero. Immutable value semantics; all operations return
// canonical results.
class CoeffExpr {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  CoeffExpr() = default;

  static CoeffExpr zero() { return {}; }
  static CoeffExpr one() { return constant(Scalar::one()); }
  static CoeffExpr constant(const Scalar& s);
  static CoeffExpr constant(int value) { return constant(Scalar(value)); }
  static CoeffExpr symbol(SymbolId id);
  static CoeffExpr symbol(std::string_view name);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // The Scalar value when no symbols occur (zero included); nullopt
  // otherwise.
  std::optional<Scalar> as_constant() const;

  // Symbols occurring in the expression, sorted by name.
  std::vector<SymbolId> symbols() const;

  // Floating evaluation with sqrt(2) taken numerically. Throws
  // UnboundSymbolError naming the first missing symbol.
  std::complex<double> eval(const Env& env) const;

  CoeffExpr& operator+=(const CoeffExpr& other);
  friend CoeffExpr operator+(CoeffExpr a, const CoeffExpr& b) {
    a += b;
    return a;
  }
  friend CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b);
  CoeffExpr operator-() const;
  friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator*(const CoeffExpr& a, const Scalar& s);
  friend CoeffExpr operator*(const Scalar& s, const CoeffExpr& a) {
    return a * s;
  }

  friend bool operator==(const CoeffExpr&, const CoeffExpr&) = default;

 private:
  void add_term(const Monomial& m, const Scalar& s);

  TermMap terms_;
};

}  // namespace symqec
