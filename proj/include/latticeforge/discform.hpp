#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"
#include "latticeforge/numeric.hpp"

namespace lf {

/// Default cap on brute-force enumeration of finite groups. Overridable per
/// call; the CLI wires it to LATTICEFORGE_MAX_GROUP.
inline const Int kDefaultMaxGroupOrder = Int(1) << 16;

/// Element of a finite abelian group in generator coordinates; entry i is
/// reduced mod the order of generator i.
struct GroupElement {
  std::vector<Int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A finite quadratic form: an abelian group in invariant-factor form
/// together with q: A -> Q/2Z on the generators and the associated bilinear
/// form b: A x A -> Q/Z. q values are stored in [0,2), b values in [0,1).
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() : b_(0, 0) {}
  FiniteQuadraticForm(std::vector<Int> orders, std::vector<Rat> q_diag, RatMat b_matrix);

  const std::vector<Int>& orders() const { return orders_; }
  const std::vector<Rat>& q_diag() const { return q_diag_; }
  const RatMat& b_matrix() const { return b_; }

  int num_generators() const { return static_cast<int>(orders_.size()); }
  Int group_order() const;
  bool is_trivial() const { return orders_.empty(); }

  /// q(x) in [0, 2).
  Rat evaluate(const GroupElement& x) const;
  /// b(x, y) in [0, 1).
  Rat bilinear(const GroupElement& x, const GroupElement& y) const;

  GroupElement zero() const;
  GroupElement reduce(std::vector<Int> coords) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement scale(const GroupElement& x, const Int& k) const;
  Int element_order(const GroupElement& x) const;

  /// Visits every group element. Throws GroupTooLarge beyond max_order.
  void for_each_element(const std::function<void(const GroupElement&)>& fn,
                        const Int& max_order = kDefaultMaxGroupOrder) const;

 private:
  std::vector<Int> orders_;
  std::vector<Rat> q_diag_;
  RatMat b_;
};

/// Discriminant form together with dual-vector lifts of its generators:
/// column i of `lifts` is a representative of generator i in L* expressed in
/// rational coordinates on the lattice basis.
struct DiscriminantForm {
  FiniteQuadraticForm form;
  RatMat lifts;
};

/// q_L on A_L for an even nondegenerate lattice. Throws OddLattice /
/// Degenerate.
FiniteQuadraticForm discriminant_form(const IntegerLattice& lattice);
DiscriminantForm discriminant_form_full(const IntegerLattice& lattice);

/// Restriction of q to the p-Sylow subgroup (an orthogonal summand).
FiniteQuadraticForm p_primary_part(const FiniteQuadraticForm& q, const Int& p);
DiscriminantForm p_primary_part(const DiscriminantForm& d, const Int& p);

/// (l, delta) of a 2-elementary form. Throws NotTwoElementary if some
/// invariant factor differs from 2.
std::pair<int, int> two_elementary_invariants(const FiniteQuadraticForm& q);

/// Signature mod 8 from the Gauss sum sum_x exp(pi i q(x)), evaluated with
/// exact cyclotomic arithmetic. Throws GroupTooLarge beyond max_order and
/// DegenerateForm if the sum has the wrong magnitude.
int milgram_signature(const FiniteQuadraticForm& q,
                      const Int& max_order = kDefaultMaxGroupOrder);

/// Searches for a group isomorphism phi with q2(phi x) = -q1(x) and
/// b2(phi x, phi y) = -b1(x, y). Returns the images of q1's generators, or
/// nullopt; the search is exhaustive, so nullopt proves nonexistence.
std::optional<std::vector<GroupElement>> find_anti_isometry(
    const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2,
    const Int& max_order = Int(1) << 12);

/// H^perp / H with the induced form, for an isotropic subgroup generated by
/// the given elements. Throws NotIsotropic.
FiniteQuadraticForm subgroup_perp_quotient(const FiniteQuadraticForm& q,
                                           const std::vector<GroupElement>& h,
                                           const Int& max_order = kDefaultMaxGroupOrder);

/// |O(q)| for a 2-elementary form with at most 8 generators, by pruned
/// backtracking over generator images.
Int orthogonal_group_order(const FiniteQuadraticForm& q);

}  // namespace lf
