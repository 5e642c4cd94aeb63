#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"
#include "latticeforge/numeric.hpp"

namespace lf {

/// Genus invariants of an even 2-elementary lattice.
struct TwoElemInvariants {
  int t_plus = 0;
  int t_minus = 0;
  int l = 0;
  int delta = 0;
};

/// Existence test for an even 2-elementary lattice with the given
/// invariants. `skip_mask` disables individual conditions (bit k skips
/// condition k); it exists for mutation tests and defaults to none.
bool two_elementary_exists(const TwoElemInvariants& inv, std::uint8_t skip_mask = 0);

enum class EmbeddingStatus { No, Yes, YesUnique, Undecided };

/// Decides whether an even lattice of signature (rank-2, 2) admits a
/// primitive embedding into the even unimodular lattice of signature (19, 3)
/// ("K3 lattice" up to sign convention), via the l-vs-rho comparison with
/// the 2-elementary reduction in the boundary case l = rho.
EmbeddingStatus k3_embedding_status(const IntegerLattice& t);

enum class Verdict { PotentiallyIrrational, AssociatedK3, AssociatedK3Unique, Undecided };

std::string to_string(EmbeddingStatus s);
std::string to_string(Verdict v);

struct ClassificationReport {
  int rho = 0;
  int ell = 0;
  Int d = 0;           // |det T|
  Rat kappa = 0;       // 2^rho / d, exact
  Verdict verdict = Verdict::Undecided;
  std::vector<std::string> reasons;
};

/// kappa = 2^rho / d as an exact rational. Throws NonPositiveD.
Rat kappa(int rho, const Int& d);

/// Hassett's rank-1 criterion: for d = 0 or 2 mod 6, the rank-1 case is
/// potentially irrational iff 9 | d, or 4 | d, or some odd prime p | d has
/// p = 2 mod 3. Throws InvalidDiscriminant otherwise.
bool hassett_rho1(const Int& d);

/// Full classification of a candidate transcendental lattice.
ClassificationReport classify(const IntegerLattice& t);

struct EnumerationResult {
  std::vector<std::pair<int, int>> candidates;  // (rho, delta)
  std::vector<int> delta0_t_exists;             // rho with delta=0 where T exists
  std::vector<int> delta0_m_exists;             // rho with delta=0 where M exists
};

/// Sweep over rho in 1..10 and delta in {0,1}: a pair survives iff the
/// 2-elementary T of signature (20-rho, 2) with l = rho exists while its
/// rank-rho complement M of signature (rho-1, 1) does not.
EnumerationResult enumerate_2elem_candidates(std::uint8_t skip_mask = 0);

}  // namespace lf
