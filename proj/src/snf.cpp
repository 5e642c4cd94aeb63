#include "latticeforge/snf.hpp"

#include <cstdlib>

#include "latticeforge/errors.hpp"

namespace lf {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Pivot with minimal |entry| > 0 in the trailing block starting at (t, t);
// first position wins ties. Returns false if the block is zero.
bool find_pivot(const IntMat& d, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best = 0;
  for (Index i = t; i < d.rows(); ++i) {
    for (Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs_int(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  const Index rows = m.rows(), cols = m.cols();
  SnfResult r;
  r.d = m;
  r.u = IntMat::Identity(rows, rows);
  r.v = IntMat::Identity(cols, cols);
  IntMat& d = r.d;

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    Index pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.row(t).swap(d.row(pi));
    r.u.row(t).swap(r.u.row(pi));
    d.col(t).swap(d.col(pj));
    r.v.col(t).swap(r.v.col(pj));

    for (bool dirty = true; dirty;) {
      dirty = false;
      // Clear column t.
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        d.row(i) -= q * d.row(t);
        r.u.row(i) -= q * r.u.row(t);
        if (d(i, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          d.row(t).swap(d.row(i));
          r.u.row(t).swap(r.u.row(i));
          dirty = true;
        }
      }
      // Clear row t.
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        d.col(j) -= q * d.col(t);
        r.v.col(j) -= q * r.v.col(t);
        if (d(t, j) != 0) {
          d.col(t).swap(d.col(j));
          r.v.col(t).swap(r.v.col(j));
          dirty = true;
        }
      }
    }

    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      r.u.row(t) = -r.u.row(t);
    }
    // Enforce divisibility into the trailing block: any non-multiple is
    // folded into row t and the pivot step repeats.
    bool redo = false;
    for (Index i = t + 1; i < rows && !redo; ++i) {
      for (Index j = t + 1; j < cols && !redo; ++j) {
        if (d(i, j) % d(t, t) != 0) {
          d.row(t) += d.row(i);
          r.u.row(t) += r.u.row(i);
          redo = true;
        }
      }
    }
    if (redo) --t;
  }
  return r;
}

IntMat hermite_normal_form(const IntMat& m) {
  IntMat h = m;
  const Index rows = h.rows(), cols = h.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r to a single entry via gcd row ops.
    for (bool dirty = true; dirty;) {
      dirty = false;
      Index best = -1;
      Int bestabs = 0;
      for (Index i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int a = abs_int(h(i, c));
        if (best < 0 || a < bestabs) {
          best = i;
          bestabs = a;
        }
      }
      if (best < 0) break;
      if (best != r) h.row(r).swap(h.row(best));
      for (Index i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        h.row(i) -= q * h.row(r);
        if (h(i, c) != 0) dirty = true;
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) = -h.row(r);
    // Reduce the entries above the pivot into [0, pivot).
    for (Index i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) h.row(i) -= q * h.row(r);
    }
    ++r;
  }
  return h.topRows(r);
}

IntMat integer_kernel(const IntMat& m) {
  SnfResult snf = smith_normal_form(m);
  const Index n = m.cols();
  const Index steps = std::min(m.rows(), n);
  Index rank = 0;
  while (rank < steps && snf.d(rank, rank) != 0) ++rank;
  IntMat kernel(n, n - rank);
  for (Index j = rank; j < n; ++j) kernel.col(j - rank) = snf.v.col(j);
  return kernel;
}

std::vector<Int> FiniteAbelianGroup::p_primary_factors(const Int& p) const {
  std::vector<Int> out;
  for (const Int& f : invariant_factors) {
    Int part = 1;
    Int rest = f;
    while (rest % p == 0) {
      part *= p;
      rest /= p;
    }
    if (part > 1) out.push_back(part);
  }
  return out;
}

FiniteAbelianGroup discriminant_group(const IntegerLattice& lattice) {
  if (!lattice.is_nondegenerate()) {
    fail("Degenerate", "discriminant group requires a nondegenerate lattice");
  }
  SnfResult snf = smith_normal_form(lattice.gram());
  FiniteAbelianGroup g;
  for (Index i = 0; i < lattice.rank(); ++i) {
    if (snf.d(i, i) > 1) g.invariant_factors.push_back(snf.d(i, i));
  }
  return g;
}

}  // namespace lf
