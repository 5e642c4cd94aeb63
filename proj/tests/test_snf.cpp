#include <doctest.h>

#include <vector>

#include "latticeforge/catalog.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/snf.hpp"

using namespace lf;

namespace {

// Deterministic small pseudo-random integer matrices.
IntMat pseudo_random(Index rows, Index cols, unsigned seed) {
  IntMat m(rows, cols);
  unsigned state = seed * 2654435761u + 1;
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      state = state * 1664525u + 1013904223u;
      m(i, j) = Int(static_cast<long>((state >> 8) % 21) - 10);
    }
  }
  return m;
}

void check_snf_contract(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  CHECK(IntMat(s.u * m * s.v) == s.d);
  Int du = integer_determinant(s.u);
  Int dv = integer_determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  const Index r = std::min(m.rows(), m.cols());
  for (Index i = 0; i < r; ++i) {
    CHECK(s.d(i, i) >= 0);
    if (i + 1 < r && s.d(i + 1, i + 1) != 0) {
      CHECK(s.d(i, i) != 0);
      CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
  }
  for (Index i = 0; i < s.d.rows(); ++i) {
    for (Index j = 0; j < s.d.cols(); ++j) {
      if (i != j) CHECK(s.d(i, j) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith_normal_form reconstruction and divisibility chain") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    check_snf_contract(pseudo_random(4, 4, seed));
    check_snf_contract(pseudo_random(3, 5, seed + 100));
    check_snf_contract(pseudo_random(5, 3, seed + 200));
  }
  check_snf_contract(IntMat::Zero(3, 3));
}

TEST_CASE("smith_normal_form on a worked example") {
  // oracle: diag(2, 6, 12) is the classical SNF of this matrix.
  IntMat m(3, 3);
  m << Int(2), Int(4), Int(4), Int(-6), Int(6), Int(12), Int(10), Int(4), Int(16);
  SnfResult s = smith_normal_form(m);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.d(2, 2) == 12);
}

TEST_CASE("hermite_normal_form is idempotent and spans the row lattice") {
  for (unsigned seed = 1; seed <= 15; ++seed) {
    IntMat m = pseudo_random(4, 4, seed + 300);
    IntMat h = hermite_normal_form(m);
    CHECK(hermite_normal_form(h) == h);
    // Stacking the original rows on top changes nothing.
    IntMat stacked(m.rows() + h.rows(), 4);
    stacked.topRows(m.rows()) = m;
    stacked.bottomRows(h.rows()) = h;
    CHECK(hermite_normal_form(stacked) == h);
  }
}

TEST_CASE("integer_kernel is correct and saturated") {
  for (unsigned seed = 1; seed <= 15; ++seed) {
    IntMat m = pseudo_random(2, 5, seed + 400);
    IntMat k = integer_kernel(m);
    CHECK(k.cols() >= 3);
    IntMat prod = m * k;
    for (Index i = 0; i < prod.rows(); ++i) {
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    }
    // Saturation: the SNF of the kernel basis has all invariant factors 1.
    SnfResult s = smith_normal_form(k);
    for (Index i = 0; i < k.cols(); ++i) CHECK(s.d(i, i) == 1);
  }
}

TEST_CASE("discriminant groups of standard lattices") {
  CHECK(discriminant_group(named_lattice("A2")).invariant_factors == std::vector<Int>{Int(3)});
  CHECK(discriminant_group(named_lattice("E8")).invariant_factors.empty());
  CHECK(discriminant_group(named_lattice("D4")).invariant_factors ==
        std::vector<Int>{Int(2), Int(2)});
  CHECK(discriminant_group(lattice_from_expression("U(2)")).invariant_factors ==
        std::vector<Int>{Int(2), Int(2)});
  CHECK(discriminant_group(lattice_from_expression("E6(2)")).invariant_factors ==
        std::vector<Int>{Int(2), Int(2), Int(2), Int(2), Int(2), Int(6)});
  CHECK_THROWS_AS(discriminant_group(IntegerLattice::from_gram(IntMat::Zero(1, 1))), Error);
}

TEST_CASE("p_primary_factors splits prime powers") {
  FiniteAbelianGroup g{{Int(2), Int(6), Int(12)}};
  CHECK(g.p_primary_factors(2) == std::vector<Int>{Int(2), Int(2), Int(4)});
  CHECK(g.p_primary_factors(3) == std::vector<Int>{Int(3), Int(3)});
  CHECK(g.p_primary_factors(5).empty());
  CHECK(g.order() == 144);
  CHECK(g.length() == 3);
}
