#pragma once

#include <map>

#include "latticeforge/lattice.hpp"
#include "latticeforge/numeric.hpp"

namespace lf {

/// Census of nonzero vectors of norm <= bound in a positive definite
/// lattice. Vectors come in +/- pairs, so every count is even.
struct ShortVectorReport {
  Int bound = 0;
  std::map<Int, Int> counts;  // norm -> number of vectors
  Int minimum = 0;            // 0 when no vector of norm <= bound exists

  Int count(const Int& norm) const {
    auto it = counts.find(norm);
    return it == counts.end() ? Int(0) : it->second;
  }
  Int total() const {
    Int t = 0;
    for (const auto& kv : counts) t += kv.second;
    return t;
  }
};

/// Exhaustive enumeration by exact Fincke-Pohst (rational LDL^T
/// decomposition, integer coordinate ranges). Throws NotPositiveDefinite.
ShortVectorReport short_vectors(const IntegerLattice& lattice, const Int& bound);

/// L(1/2) when every Gram entry is even and every diagonal entry is
/// divisible by 4; throws NotHalfScalable naming the offending entry.
IntegerLattice half_rescale_check(const IntegerLattice& lattice);

/// Isometry test for positive definite lattices of rank <= 8: invariant
/// quick rejection, then backtracking over short-vector images of the basis.
bool isometric_small(const IntegerLattice& a, const IntegerLattice& b);

}  // namespace lf
