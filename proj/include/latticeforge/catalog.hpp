#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latticeforge/lattice.hpp"

namespace lf {

/// Standard lattice by name: An (n >= 1), Dn (n >= 4), E6, E7, E8, U,
/// <k> (rank one), Ip,q (odd diag(1^p, -1^q)). Throws UnknownName /
/// BadParameter.
IntegerLattice named_lattice(const std::string& name);

/// The rank-22 even lattice A2 + 2*E8 + 2*U.
IntegerLattice cubic_primitive_lattice();

/// The rank-22 even unimodular lattice 2*E8 + 3*U (positive E8 convention).
IntegerLattice k3_lattice();

/// AST of a lattice expression:
///   expr := term ("+" term)*
///   term := [count "*"] atom ["(" integer ")"]
///   atom := name | "(" expr ")"
struct LatticeExpression {
  enum class Kind { Named, Scale, Repeat, Sum };

  Kind kind = Kind::Named;
  std::string name;                                        // Named
  Int scale = 1;                                           // Scale
  Int count = 0;                                           // Repeat
  std::vector<std::shared_ptr<LatticeExpression>> children;  // Scale/Repeat: 1, Sum: n
};

/// Parses an expression such as "3*D4 + 2*U" or "A2 + 2*E8 + 2*U".
/// Throws SyntaxError (with position), UnknownName, ZeroScale.
LatticeExpression parse_expression(const std::string& text);

/// Canonical printer; parse(print(e)) reproduces the AST.
std::string to_string(const LatticeExpression& expr);

IntegerLattice evaluate(const LatticeExpression& expr);

/// parse + evaluate.
IntegerLattice lattice_from_expression(const std::string& text);

}  // namespace lf
