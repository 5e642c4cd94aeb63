#pragma once

#include <optional>

#include "latticeforge/discform.hpp"
#include "latticeforge/lattice.hpp"
#include "latticeforge/numeric.hpp"

namespace lf {

/// A sublattice given by basis vectors in the coordinates of an ambient
/// lattice; rows of `basis` are the vectors.
struct SublatticeBasis {
  IntegerLattice ambient;
  IntMat basis;
};

/// Gluing data for an overlattice: rational generators (rows) read as
/// elements of base*/base.
struct GlueData {
  IntegerLattice base;
  RatMat generators;
};

/// Finite-index overlattice generated by the base and the glue vectors.
/// Requires the glue vectors to lie in the dual and to span an isotropic
/// subgroup H of the discriminant form; then det(result) = det(base)/|H|^2
/// and the result is even. The output basis is normalized by Hermite normal
/// form, so the Gram matrix is deterministic.
IntegerLattice overlattice(const GlueData& glue);

/// Saturated orthogonal complement of the sublattice in its ambient lattice.
/// Non-primitive input is accepted; the complement only depends on the
/// rational span.
IntegerLattice orthogonal_complement(const SublatticeBasis& sub);

/// True iff the vectors span a primitive sublattice (every invariant factor
/// of the coordinate matrix is 1).
bool is_primitive(const SublatticeBasis& sub);

/// Saturation of the sublattice: basis (rows) of (span Q) intersect ambient.
IntMat saturate(const SublatticeBasis& sub);

/// Glue data for the graph of an anti-isometry between the p-primary parts
/// of the discriminant forms of `left` and `right`, inside left + right.
/// Returns nullopt when no anti-isometry exists.
std::optional<GlueData> graph_glue(const IntegerLattice& left,
                                   const IntegerLattice& right,
                                   const Int& p = 2);

}  // namespace lf
