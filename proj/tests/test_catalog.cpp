#include <doctest.h>

#include "latticeforge/catalog.hpp"
#include "latticeforge/errors.hpp"

using namespace lf;

TEST_CASE("named lattice Gram conventions") {
  IntegerLattice a2 = named_lattice("A2");
  CHECK(a2.gram()(0, 1) == 1);
  CHECK(a2.gram()(0, 0) == 2);
  IntegerLattice d4 = named_lattice("D4");
  CHECK(d4.gram()(0, 1) == -1);
  // Node 1 is the branch node of D4: it meets all three others.
  Int row1_offdiag = d4.gram()(1, 0) + d4.gram()(1, 2) + d4.gram()(1, 3);
  CHECK(row1_offdiag == -3);
  IntegerLattice u = named_lattice("U");
  CHECK(u.gram()(0, 0) == 0);
  CHECK(u.gram()(0, 1) == 1);
  CHECK(named_lattice("<-6>").gram()(0, 0) == -6);
  IntegerLattice i193 = named_lattice("I19,3");
  CHECK(i193.rank() == 22);
  CHECK(signature(i193) == Signature{19, 3});
  CHECK(!i193.is_even());
}

TEST_CASE("named lattice errors") {
  auto code_of = [](const std::string& name) {
    try {
      named_lattice(name);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("no-throw");
  };
  CHECK(code_of("Q5") == "UnknownName");
  CHECK(code_of("D3") == "BadParameter");
  CHECK(code_of("A0") == "BadParameter");
  CHECK(code_of("E9") == "BadParameter");
  CHECK(code_of("U2") == "UnknownName");
  CHECK(code_of("<x>") == "BadParameter");
  CHECK(code_of("") == "UnknownName");
}

TEST_CASE("well-known constants") {
  IntegerLattice ambient = cubic_primitive_lattice();
  CHECK(ambient.rank() == 22);
  CHECK(ambient.det() == 3);
  CHECK(ambient.is_even());
  CHECK(signature(ambient) == Signature{20, 2});

  IntegerLattice k3 = k3_lattice();
  CHECK(k3.rank() == 22);
  CHECK(k3.det() == -1);
  CHECK(k3.is_even());
  CHECK(signature(k3) == Signature{19, 3});
}

TEST_CASE("expression evaluation") {
  IntegerLattice t = lattice_from_expression("3*D4 + 2*U");
  CHECK(t.rank() == 16);
  CHECK(abs(t.det()) == 64);
  CHECK(signature(t) == Signature{14, 2});
  CHECK(determinant(lattice_from_expression("E6(2)")) == 192);
  CHECK(lattice_from_expression("2*(A1 + U)").rank() == 6);
  CHECK(lattice_from_expression("(U)(2)") == lattice_from_expression("U(2)"));
  CHECK(lattice_from_expression("A1(-1)").gram()(0, 0) == -2);
  CHECK(lattice_from_expression(" A2+ 2*E8 +2* U ").rank() == 22);
}

TEST_CASE("sum order does not change coarse invariants") {
  IntegerLattice a = lattice_from_expression("A2 + D4 + U");
  IntegerLattice b = lattice_from_expression("U + A2 + D4");
  CHECK(a.det() == b.det());
  CHECK(signature(a) == signature(b));
  CHECK(a.is_even() == b.is_even());
}

TEST_CASE("parser round trip through the canonical printer") {
  for (const std::string& text :
       {"A2 + 2*E8 + 2*U", "3*D4 + 2*U", "E6(2)", "2*(A1 + U)(2) + <4>", "U", "<-2> + I2,1",
        "4*A1", "(A2 + U)(3)"}) {
    LatticeExpression e = parse_expression(text);
    std::string printed = to_string(e);
    LatticeExpression again = parse_expression(printed);
    CHECK(to_string(again) == printed);
    CHECK(evaluate(e) == evaluate(again));
  }
}

TEST_CASE("parser rejects malformed input") {
  auto code_of = [](const std::string& text) {
    try {
      lattice_from_expression(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("no-throw");
  };
  CHECK(code_of("D4(0)") == "ZeroScale");
  CHECK(code_of("3*") == "SyntaxError");
  CHECK(code_of("A2 +") == "SyntaxError");
  CHECK(code_of("A2 B3") == "SyntaxError");
  CHECK(code_of("(A2") == "SyntaxError");
  CHECK(code_of("0*U") == "SyntaxError");
  CHECK(code_of("<4") == "SyntaxError");
  CHECK(code_of("") == "SyntaxError");
  CHECK(code_of("Z8") == "UnknownName");
}
