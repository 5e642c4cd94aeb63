#include "latticeforge/lattice.hpp"

#include <string>

#include "latticeforge/errors.hpp"

namespace lf {

IntegerLattice IntegerLattice::from_gram(const IntMat& gram) {
  if (gram.rows() != gram.cols()) {
    fail("NonSquare", "Gram matrix must be square");
  }
  for (Index i = 0; i < gram.rows(); ++i) {
    for (Index j = i + 1; j < gram.cols(); ++j) {
      if (gram(i, j) != gram(j, i)) {
        fail("NonSymmetric", "Gram matrix is not symmetric at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
      }
    }
  }
  bool even = true;
  for (Index i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) % 2 != 0) {
      even = false;
      break;
    }
  }
  return IntegerLattice(gram, integer_determinant(gram), even);
}

Int integer_determinant(const IntMat& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        // Exact by the Bareiss identity.
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Signature signature(const IntegerLattice& lattice) {
  if (!lattice.is_nondegenerate()) {
    fail("Degenerate", "signature requires a nondegenerate lattice");
  }
  const Index n = lattice.rank();
  RatMat a = lattice.gram().cast<Rat>();
  Signature sig;
  for (Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Pivot search on the remaining diagonal.
      Index p = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, i) != 0) {
          p = i;
          break;
        }
      }
      if (p >= 0) {
        a.row(k).swap(a.row(p));
        a.col(k).swap(a.col(p));
      } else {
        // All remaining diagonal entries vanish; expose a pivot by adding a
        // row (and its column) with a nonzero entry in column k.
        Index q = -1;
        for (Index i = k + 1; i < n; ++i) {
          if (a(i, k) != 0) {
            q = i;
            break;
          }
        }
        if (q < 0) fail("Degenerate", "degenerate block during diagonalization");
        a.row(k) += a.row(q);
        a.col(k) += a.col(q);
      }
    }
    const Rat pivot = a(k, k);
    if (pivot > 0) {
      ++sig.plus;
    } else {
      ++sig.minus;
    }
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
  }
  return sig;
}

IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b) {
  const Index n = a.rank(), m = b.rank();
  IntMat g(n + m, n + m);
  g.setZero();
  g.topLeftCorner(n, n) = a.gram();
  g.bottomRightCorner(m, m) = b.gram();
  return IntegerLattice::from_gram(g);
}

IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts) {
  IntegerLattice acc;
  for (const IntegerLattice& part : parts) acc = direct_sum(acc, part);
  return acc;
}

IntegerLattice rescale(const IntegerLattice& lattice, const Int& scale) {
  if (scale == 0) fail("ZeroScale", "cannot rescale a lattice by 0");
  IntMat g = lattice.gram() * scale;
  return IntegerLattice::from_gram(g);
}

}  // namespace lf
