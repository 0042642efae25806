#pragma once

#include <array>
#include <string_view>
#include <variant>
#include <vector>

#include "symqec/state.hpp"

namespace symqec {

enum class BuiltinGate { H, X, Y, YPaper, Z, Id };

const char* builtin_gate_name(BuiltinGate g);

// One-qubit gate defined by its basis-state rewrite images. For rules with
// all-numeric coefficients the induced 2x2 matrix (columns image0, image1)
// is checked unitary, exactly.
struct GateRule {
  State image0;  // image of e[0]
  State image1;  // image of e[1]

  static GateRule checked(State image0, State image1);
};

// H, X, Z, Id as the standard rewrite rules; Y is the standard Pauli
// (e[0] -> i e[1], e[1] -> -i e[0]); YPaper is the diagonal variant
// (e[0] -> -i e[0], e[1] -> i e[1]), equal to -i Z.
GateRule builtin_gate(BuiltinGate g);
GateRule builtin_gate(std::string_view name);  // "H","X","Y","Ypaper","Z","Id"

// Positioned circuit elements, 1-based qubit indices. Note the controlled
// ops carry the TARGET first: ControlledNot{i, j} updates bit i with
// x_i xor x_j.
struct SingleGate {
  BuiltinGate gate;
  int position;
  friend bool operator==(const SingleGate&, const SingleGate&) = default;
};
struct ControlledNot {
  int target;
  int control;
  friend bool operator==(const ControlledNot&, const ControlledNot&) = default;
};
struct ToffoliGate {
  int target;
  int control1;
  int control2;
  friend bool operator==(const ToffoliGate&, const ToffoliGate&) = default;
};

using GateOp = std::variant<SingleGate, ControlledNot, ToffoliGate>;
using Circuit = std::vector<GateOp>;

// Rewrites qubit `position` of every term through the rule and
// redistributes by linearity.
State apply_single(const State& s, const GateRule& rule, int position);

// Per-term bit update x_target <- x_target xor x_control.
State apply_cnot(const State& s, int target, int control);

// Per-term bit update x_target <- x_target xor (x_c1 * x_c2).
State apply_toffoli(const State& s, int target, int control1, int control2);

State apply_gate_op(const State& s, const GateOp& op);

// Left-to-right fold of the element applications.
State apply_circuit(const State& s, const Circuit& c);

// Smallest qubit count on which every element is in range (0 when empty).
int circuit_min_width(const Circuit& c);

using ScalarMatrix2 = std::array<std::array<Scalar, 2>, 2>;  // [row][col]

// Exact matrix of a numeric rule; throws on symbolic coefficients.
ScalarMatrix2 rule_matrix(const GateRule& rule);

}  // namespace symqec
