#pragma once

#include <vector>

#include "latticeforge/lattice.hpp"
#include "latticeforge/numeric.hpp"

namespace lf {

/// Smith normal form u * m * v = d with u, v unimodular and d diagonal,
/// nonnegative, satisfying the divisibility chain d_i | d_{i+1}.
struct SnfResult {
  IntMat u;
  IntMat d;
  IntMat v;
};

/// Deterministic Smith normal form (minimal-absolute-value pivot, first
/// position wins ties).
SnfResult smith_normal_form(const IntMat& m);

/// Row-style Hermite normal form: returns h = u * m for some unimodular u,
/// with h in row echelon form, positive pivots, and entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped, so the rows of h are a
/// basis of the row lattice of m.
IntMat hermite_normal_form(const IntMat& m);

/// Basis of the saturated integer kernel {x : m x = 0}, returned as matrix
/// columns. The basis extends to a basis of Z^n, so the kernel is primitive.
IntMat integer_kernel(const IntMat& m);

/// A finite abelian group in invariant-factor form: n_1 | n_2 | ... | n_k,
/// all n_i > 1.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;

  int length() const { return static_cast<int>(invariant_factors.size()); }
  Int order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
  }
  /// Invariant factors of the p-Sylow subgroup.
  std::vector<Int> p_primary_factors(const Int& p) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Discriminant group A_L = L*/L of a nondegenerate lattice, from the SNF of
/// the Gram matrix. Throws Degenerate if det = 0.
FiniteAbelianGroup discriminant_group(const IntegerLattice& lattice);

}  // namespace lf
