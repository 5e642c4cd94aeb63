#pragma once

// Internal helper for exact Gauss-sum evaluation: arithmetic in Z[x]/(x^n - 1)
// with a zero test at a primitive n-th root of unity (reduction mod the n-th
// cyclotomic polynomial).

#include <vector>

#include "latticeforge/numeric.hpp"

namespace lf::detail {

// Polynomial over Z, coefficients in ascending degree order.
using Poly = std::vector<Int>;

const Poly& cyclotomic_polynomial(long n);

struct CircPoly {
  long n = 1;
  std::vector<Int> c;  // size n

  explicit CircPoly(long modulus) : n(modulus), c(static_cast<size_t>(modulus), Int(0)) {}
};

void add_monomial(CircPoly& p, long exponent, const Int& coeff);
CircPoly mul(const CircPoly& a, const CircPoly& b);
CircPoly sub(const CircPoly& a, const CircPoly& b);

/// True iff p(zeta) = 0 for zeta a primitive n-th root of unity.
bool vanishes_at_primitive_root(const CircPoly& p);

}  // namespace lf::detail
