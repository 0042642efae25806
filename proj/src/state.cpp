#include "symqec/state.hpp"

#include <algorithm>

#include "symqec/errors.hpp"

namespace symqec {

namespace {

void check_width(int n) {
  if (n < 1) {
    throw WidthError("state needs at least one qubit");
  }
  if (n > kMaxQubits) {
    throw WidthError("state width " + std::to_string(n) + " exceeds limit " +
                     std::to_string(kMaxQubits));
  }
}

}  // namespace

Ket::Ket(std::span<const int> bits) : n_(0), bits_(0) {
  check_width(static_cast<int>(bits.size()));
  n_ = static_cast<uint32_t>(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error("ket bits must be 0 or 1");
    }
    bits_ = (bits_ << 1) | static_cast<uint32_t>(b);
  }
}

Ket Ket::from_string(std::string_view bits) {
  std::vector<int> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error("ket string must contain only 0 and 1");
    }
    v.push_back(c - '0');
  }
  return Ket(std::span<const int>(v));
}

Ket Ket::from_index(int n, uint32_t index) {
  check_width(n);
  if (n < 32 && index >= (uint32_t{1} << n)) {
    throw Error("ket index out of range");
  }
  return Ket(static_cast<uint32_t>(n), index);
}

int Ket::bit(int position) const {
  if (position < 1 || position > size()) {
    throw PositionError("qubit position " + std::to_string(position) +
                        " out of range 1.." + std::to_string(size()));
  }
  return static_cast<int>((bits_ >> (n_ - position)) & 1u);
}

Ket Ket::with_bit(int position, int value) const {
  if (position < 1 || position > size()) {
    throw PositionError("qubit position " + std::to_string(position) +
                        " out of range 1.." + std::to_string(size()));
  }
  if (value != 0 && value != 1) {
    throw Error("ket bits must be 0 or 1");
  }
  const uint32_t mask = uint32_t{1} << (n_ - position);
  return {n_, value ? (bits_ | mask) : (bits_ & ~mask)};
}

std::string Ket::to_string() const {
  std::string out(n_, '0');
  for (uint32_t k = 0; k < n_; ++k) {
    if ((bits_ >> (n_ - 1 - k)) & 1u) {
      out[k] = '1';
    }
  }
  return out;
}

State::State(int num_qubits) : n_(num_qubits) { check_width(n_); }

State State::basis(const Ket& ket) {
  State out(ket.size());
  out.terms_.emplace(ket, CoeffExpr::one());
  return out;
}

CoeffExpr State::coeff(const Ket& ket) const {
  if (ket.size() != n_) {
    throw WidthError("ket width does not match state width");
  }
  auto it = terms_.find(ket);
  return it == terms_.end() ? CoeffExpr::zero() : it->second;
}

State State::scaled(const CoeffExpr& factor) const {
  State out(n_);
  if (factor.is_zero()) {
    return out;
  }
  for (const auto& [ket, c] : terms_) {
    out.add_term(ket, c * factor);
  }
  return out;
}

void State::add_term(const Ket& ket, const CoeffExpr& coeff) {
  if (ket.size() != n_) {
    throw WidthError("ket width does not match state width");
  }
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(ket, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

std::vector<SymbolId> State::symbols() const {
  std::vector<SymbolId> out;
  for (const auto& [ket, c] : terms_) {
    for (SymbolId s : c.symbols()) {
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](SymbolId a, SymbolId b) {
    return symbol_name(a) < symbol_name(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

State ket_state(std::span<const int> bits) { return State::basis(Ket(bits)); }

State ket_state(std::initializer_list<int> bits) {
  return State::basis(Ket(bits));
}

State ket_state(std::string_view bits) {
  return State::basis(Ket::from_string(bits));
}

State superpose(const std::vector<std::pair<CoeffExpr, State>>& parts) {
  if (parts.empty()) {
    throw Error("superpose needs at least one component");
  }
  const int n = parts.front().second.qubits();
  State out(n);
  for (const auto& [factor, state] : parts) {
    if (state.qubits() != n) {
      throw WidthError("superpose requires equal qubit counts");
    }
    if (factor.is_zero()) {
      continue;
    }
    for (const auto& [ket, c] : state.terms()) {
      out.add_term(ket, factor * c);
    }
  }
  return out;
}

State tensor(const State& a, const State& b) {
  const int n = a.qubits() + b.qubits();
  check_width(n);
  State out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const uint32_t bits = (ka.index() << b.qubits()) | kb.index();
      out.add_term(Ket::from_index(n, bits), ca * cb);
    }
  }
  return out;
}

bool states_equal(const State& a, const State& b) { return a == b; }

bool phase_equivalent(const State& a, const State& b) {
  if (a.qubits() != b.qubits() || a.num_terms() != b.num_terms()) {
    return false;
  }
  // Supports must coincide.
  std::vector<std::pair<CoeffExpr, CoeffExpr>> pairs;
  pairs.reserve(a.terms().size());
  auto ib = b.terms().begin();
  for (auto ia = a.terms().begin(); ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      return false;
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  // Cross-multiplication test over all ket pairs.
  for (size_t j = 0; j < pairs.size(); ++j) {
    for (size_t k = j + 1; k < pairs.size(); ++k) {
      if (pairs[j].first * pairs[k].second != pairs[k].first * pairs[j].second) {
        return false;
      }
    }
  }
  return true;
}

double norm_sq(const State& s, const Env& env) {
  double acc = 0.0;
  for (const auto& [ket, c] : s.terms()) {
    acc += std::norm(c.eval(env));
  }
  return acc;
}

}  // namespace symqec
