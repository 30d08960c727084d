#pragma once

#include <string>
#include <vector>

#include "adiag/group.hpp"

namespace adiag {

// Action of a cyclic complement on the base of a semidirect product.
//   inv    : x -> x^-1            (base must be abelian)
//   shift  : cyclic left rotation of the base's direct-product coordinates
//   pow:k  : x -> x^k             (base must be abelian, k invertible)
// Whether the resulting map really is an automorphism of the right order is
// verified when the group is built.
struct ActionSpec {
  enum class Kind { Inv, Shift, Pow };
  Kind kind = Kind::Inv;
  long long k = 0;

  bool operator==(const ActionSpec&) const = default;
};

// AST for the group expression language:
//   expr   := term (("x" | U+00D7) term)*
//   term   := atom | "sd(" expr "," "C" int "," action ")"
//   atom   := "C"n | "D"n | "Dic"n | "Q8" | "S"n | "A"n | "Heis"n | "(" expr ")"
//   action := "inv" | "shift" | "pow:" int
// Products are flattened, so parse(print(e)) == e and printing is canonical.
// D n is the dihedral group of order 2n.
struct GroupExpr {
  enum class Kind { Atom, Product, Semidirect };
  Kind kind = Kind::Atom;

  std::string atom;  // one of C D Dic Q8 S A Heis (param unused for Q8)
  int param = 0;

  std::vector<GroupExpr> children;  // Product: >=2 factors; Semidirect: the base

  int cyclic_order = 0;  // Semidirect complement C_m
  ActionSpec action;

  bool operator==(const GroupExpr&) const = default;
};

GroupExpr parse_expr(const std::string& text);
std::string print_expr(const GroupExpr& e);

// Group order the expression will have, computed without building anything.
long long nominal_order(const GroupExpr& e);

// Builds the group; label is set to print_expr(e). Throws UsageError when the
// nominal order exceeds max_order, VerifyError when an action is invalid.
FiniteGroup evaluate(const GroupExpr& e, int max_order);

FiniteGroup evaluate(const std::string& text, int max_order);

}  // namespace adiag
