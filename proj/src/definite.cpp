#include "latticeforge/definite.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "latticeforge/errors.hpp"

namespace lf {

namespace {

// G = U^T D U with U unit upper triangular and D diagonal, both rational.
// Throws unless all pivots are positive.
void ldl_decompose(const IntMat& gram, RatMat& u, std::vector<Rat>& d) {
  const Index n = gram.rows();
  RatMat a = gram.cast<Rat>();
  u = RatMat::Identity(n, n);
  d.assign(static_cast<size_t>(n), Rat(0));
  for (Index k = 0; k < n; ++k) {
    Rat pivot = a(k, k);
    for (Index i = 0; i < k; ++i) {
      pivot -= d[static_cast<size_t>(i)] * u(i, k) * u(i, k);
    }
    if (pivot <= 0) fail("NotPositiveDefinite", "Gram matrix has a nonpositive pivot");
    d[static_cast<size_t>(k)] = pivot;
    for (Index j = k + 1; j < n; ++j) {
      Rat acc = a(k, j);
      for (Index i = 0; i < k; ++i) {
        acc -= d[static_cast<size_t>(i)] * u(i, k) * u(i, j);
      }
      u(k, j) = acc / pivot;
    }
  }
}

}  // namespace

ShortVectorReport short_vectors(const IntegerLattice& lattice, const Int& bound) {
  const Index n = lattice.rank();
  RatMat u;
  std::vector<Rat> d;
  ldl_decompose(lattice.gram(), u, d);

  ShortVectorReport report;
  report.bound = bound;
  if (bound < 0 || n == 0) return report;

  // x^T G x = sum_k d_k (x_k + t_k)^2 with t_k = sum_{j>k} u(k,j) x_j.
  // Enumerate from the last coordinate down; for each level scan outward
  // from the center while the partial sum stays within budget. Only the
  // first nonzero coordinate (from the top) positive half is counted, then
  // doubled.
  std::vector<Int> x(static_cast<size_t>(n), Int(0));

  std::function<void(Index, const Rat&)> descend = [&](Index k, const Rat& budget) {
    if (k < 0) {
      Rat norm = Rat(bound) - budget;
      // budget = bound - x^T G x at this point.
      if (norm > 0) {
        report.counts[Int(norm.get_num())] += 2;
      }
      return;
    }
    Rat t = 0;
    for (Index j = k + 1; j < n; ++j) t += u(k, j) * Rat(x[static_cast<size_t>(j)]);
    const Rat dk = d[static_cast<size_t>(k)];
    // Center of the interval is -t; start at floor(-t) and scan both ways.
    Int center = rat_floor(-t);
    for (Int v = center;; v -= 1) {
      Rat term = dk * (Rat(v) + t) * (Rat(v) + t);
      if (term > budget) break;
      x[static_cast<size_t>(k)] = v;
      descend(k - 1, budget - term);
    }
    for (Int v = center + 1;; v += 1) {
      Rat term = dk * (Rat(v) + t) * (Rat(v) + t);
      if (term > budget) break;
      x[static_cast<size_t>(k)] = v;
      descend(k - 1, budget - term);
    }
    x[static_cast<size_t>(k)] = 0;
  };

  // Restrict to vectors whose last nonzero coordinate is positive by
  // splitting on the highest nonzero level.
  for (Index top = n - 1; top >= 0; --top) {
    // x_j = 0 for j > top, x_top > 0.
    std::fill(x.begin(), x.end(), Int(0));
    const Rat dtop = d[static_cast<size_t>(top)];
    for (Int v = 1;; v += 1) {
      Rat term = dtop * Rat(v) * Rat(v);
      if (term > bound) break;
      x[static_cast<size_t>(top)] = v;
      descend(top - 1, Rat(bound) - term);
    }
  }

  if (!report.counts.empty()) report.minimum = report.counts.begin()->first;
  return report;
}

IntegerLattice half_rescale_check(const IntegerLattice& lattice) {
  const IntMat& g = lattice.gram();
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) {
      bool ok = (i == j) ? (g(i, j) % 4 == 0) : (g(i, j) % 2 == 0);
      if (!ok) {
        fail("NotHalfScalable", "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") = " + g(i, j).get_str() +
                                    (i == j ? " is not divisible by 4" : " is odd"));
      }
    }
  }
  IntMat half = g;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) half(i, j) = g(i, j) / 2;
  }
  return IntegerLattice::from_gram(half);
}

bool isometric_small(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.rank() != b.rank()) return false;
  const Index n = a.rank();
  if (n > 8) fail("RankTooLarge", "isometry search capped at rank 8");
  if (n == 0) return true;
  for (Index i = 0; i < n; ++i) {
    if (a.gram()(i, i) <= 0 || b.gram()(i, i) <= 0) {
      fail("NotPositiveDefinite", "isometry search requires positive definite lattices");
    }
  }
  if (determinant(a) != determinant(b)) return false;

  // Largest diagonal norm needed for basis images, plus a fixed-window theta
  // comparison as a cheap invariant.
  Int max_diag = 0;
  for (Index i = 0; i < n; ++i) max_diag = std::max(max_diag, a.gram()(i, i));
  ShortVectorReport sa = short_vectors(a, std::max(Int(8), max_diag));
  ShortVectorReport sb = short_vectors(b, std::max(Int(8), max_diag));
  for (Int m = 1; m <= 8; ++m) {
    if (sa.count(m) != sb.count(m)) return false;
  }

  // Candidate images in b of the i-th basis vector of a: vectors of the
  // right norm. Both signs are needed, so rebuild full vector lists.
  std::vector<std::vector<IntVec>> by_norm(static_cast<size_t>(n));
  {
    // Recover explicit vectors with a plain recursive enumeration over b.
    std::vector<IntVec> all;
    RatMat u;
    std::vector<Rat> d;
    ldl_decompose(b.gram(), u, d);
    IntVec x = IntVec::Zero(n);
    std::function<void(Index, const Rat&)> walk = [&](Index k, const Rat& budget) {
      if (k < 0) {
        bool zero = true;
        for (Index j = 0; j < n && zero; ++j) zero = (x(j) == 0);
        if (!zero) all.push_back(x);
        return;
      }
      Rat t = 0;
      for (Index j = k + 1; j < n; ++j) t += u(k, j) * Rat(x(j));
      const Rat dk = d[static_cast<size_t>(k)];
      Int center = rat_floor(-t);
      for (Int v = center;; v -= 1) {
        Rat term = dk * (Rat(v) + t) * (Rat(v) + t);
        if (term > budget) break;
        x(k) = v;
        walk(k - 1, budget - term);
      }
      for (Int v = center + 1;; v += 1) {
        Rat term = dk * (Rat(v) + t) * (Rat(v) + t);
        if (term > budget) break;
        x(k) = v;
        walk(k - 1, budget - term);
      }
      x(k) = 0;
    };
    walk(n - 1, Rat(max_diag));
    for (const IntVec& v : all) {
      Int norm = (v.transpose() * b.gram() * v)(0);
      for (Index i = 0; i < n; ++i) {
        if (norm == a.gram()(i, i)) by_norm[static_cast<size_t>(i)].push_back(v);
      }
    }
  }

  std::vector<IntVec> images;
  std::function<bool(Index)> place = [&](Index i) -> bool {
    if (i == n) {
      IntMat m(n, n);
      for (Index r = 0; r < n; ++r) m.row(r) = images[static_cast<size_t>(r)].transpose();
      Int det = integer_determinant(m);
      return det == 1 || det == -1;
    }
    for (const IntVec& v : by_norm[static_cast<size_t>(i)]) {
      bool ok = true;
      for (Index j = 0; j < i && ok; ++j) {
        Int pair = (images[static_cast<size_t>(j)].transpose() * b.gram() * v)(0);
        if (pair != a.gram()(j, i)) ok = false;
      }
      if (!ok) continue;
      images.push_back(v);
      if (place(i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  return place(0);
}

}  // namespace lf
