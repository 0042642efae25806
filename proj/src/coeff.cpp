#include "symqec/coeff.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "symqec/errors.hpp"

namespace symqec {

namespace {

struct SymbolTable {
  std::mutex mutex;
  std::deque<std::string> names;  // deque: stable references on growth
  std::map<std::string, uint32_t, std::less<>> ids;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

SymbolId intern_symbol(std::string_view name) {
  if (name.empty()) {
    throw Error("symbol name must be nonempty");
  }
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.ids.find(name); it != t.ids.end()) {
    return SymbolId{it->second};
  }
  const auto id = static_cast<uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return SymbolId{id};
}

const std::string& symbol_name(SymbolId id) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.at(id.value);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) {
    d += static_cast<int>(f.exponent);
  }
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->symbol == ib->symbol) {
      out.factors_.push_back({ia->symbol, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    } else if (symbol_name(ia->symbol) < symbol_name(ib->symbol)) {
      out.factors_.push_back(*ia++);
    } else {
      out.factors_.push_back(*ib++);
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].symbol != fb[k].symbol) {
      return symbol_name(fa[k].symbol) < symbol_name(fb[k].symbol);
    }
    if (fa[k].exponent != fb[k].exponent) {
      return fa[k].exponent < fb[k].exponent;
    }
  }
  return fa.size() < fb.size();
}

CoeffExpr CoeffExpr::constant(const Scalar& s) {
  CoeffExpr out;
  out.add_term(Monomial(), s);
  return out;
}

CoeffExpr CoeffExpr::symbol(SymbolId id) {
  CoeffExpr out;
  out.add_term(Monomial(id), Scalar::one());
  return out;
}

CoeffExpr CoeffExpr::symbol(std::string_view name) {
  return symbol(intern_symbol(name));
}

std::optional<Scalar> CoeffExpr::as_constant() const {
  if (terms_.empty()) {
    return Scalar::zero();
  }
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

std::vector<SymbolId> CoeffExpr::symbols() const {
  std::vector<SymbolId> out;
  for (const auto& [mono, scalar] : terms_) {
    for (const auto& f : mono.factors()) {
      out.push_back(f.symbol);
    }
  }
  std::sort(out.begin(), out.end(), [](SymbolId a, SymbolId b) {
    return symbol_name(a) < symbol_name(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::complex<double> CoeffExpr::eval(const Env& env) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [mono, scalar] : terms_) {
    std::complex<double> term = scalar.to_complex();
    for (const auto& f : mono.factors()) {
      auto it = env.find(f.symbol);
      if (it == env.end()) {
        throw UnboundSymbolError(symbol_name(f.symbol));
      }
      for (uint32_t k = 0; k < f.exponent; ++k) {
        term *= it->second;
      }
    }
    acc += term;
  }
  return acc;
}

void CoeffExpr::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(m, s);
  if (!inserted) {
    it->second = it->second + s;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

CoeffExpr& CoeffExpr::operator+=(const CoeffExpr& other) {
  for (const auto& [mono, scalar] : other.terms_) {
    add_term(mono, scalar);
  }
  return *this;
}

CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b) {
  CoeffExpr out = a;
  for (const auto& [mono, scalar] : b.terms_) {
    out.add_term(mono, -scalar);
  }
  return out;
}

CoeffExpr CoeffExpr::operator-() const {
  CoeffExpr out;
  for (const auto& [mono, scalar] : terms_) {
    out.terms_.emplace(mono, -scalar);
  }
  return out;
}

CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
  CoeffExpr out;
  for (const auto& [ma, sa] : a.terms_) {
    for (const auto& [mb, sb] : b.terms_) {
      out.add_term(ma * mb, sa * sb);
    }
  }
  return out;
}

CoeffExpr operator*(const CoeffExpr& a, const Scalar& s) {
  CoeffExpr out;
  if (s.is_zero()) {
    return out;
  }
  for (const auto& [mono, scalar] : a.terms_) {
    out.add_term(mono, scalar * s);
  }
  return out;
}

}  // namespace symqec
