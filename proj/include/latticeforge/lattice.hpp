#pragma once

#include <vector>

#include "latticeforge/numeric.hpp"

namespace lf {

/// Signature of a nondegenerate real quadratic space: counts of positive and
/// negative eigenvalues.
struct Signature {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A finite-rank integral lattice, represented by a symmetric Gram matrix
/// with arbitrary-precision integer entries. Immutable after construction;
/// evenness and the exact determinant are computed once and cached.
///
/// The rank-0 lattice is legal: it is unimodular, even, and the identity for
/// direct sums.
class IntegerLattice {
 public:
  IntegerLattice() : gram_(0, 0), det_(1), even_(true) {}

  /// Validates a square integer matrix as a Gram matrix.
  /// Throws NonSymmetric if gram != gram^T.
  static IntegerLattice from_gram(const IntMat& gram);

  Index rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const Int& det() const { return det_; }
  bool is_even() const { return even_; }
  bool is_nondegenerate() const { return det_ != 0; }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntegerLattice(IntMat gram, Int det, bool even)
      : gram_(std::move(gram)), det_(std::move(det)), even_(even) {}

  IntMat gram_;
  Int det_;
  bool even_;
};

/// Exact determinant of an arbitrary square integer matrix (fraction-free
/// Bareiss elimination).
Int integer_determinant(const IntMat& m);

/// Exact signature via rational congruence diagonalization. Throws
/// Degenerate if det = 0.
Signature signature(const IntegerLattice& lattice);

inline const Int& determinant(const IntegerLattice& lattice) { return lattice.det(); }

/// Block-diagonal sum. Rank adds, determinant multiplies, evenness is the
/// conjunction.
IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b);

IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts);

/// L(a): Gram scaled entrywise by a. Throws ZeroScale if a = 0.
IntegerLattice rescale(const IntegerLattice& lattice, const Int& scale);

}  // namespace lf
