#include "latticeforge/nikulin.hpp"

#include <algorithm>

#include "latticeforge/discform.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/snf.hpp"

namespace lf {

bool two_elementary_exists(const TwoElemInvariants& inv, std::uint8_t skip_mask) {
  const int tp = inv.t_plus, tm = inv.t_minus, l = inv.l, delta = inv.delta;
  auto active = [&](int k) { return (skip_mask & (1u << k)) == 0; };
  const int sig = tp - tm;
  auto mod8 = [](int x) { return ((x % 8) + 8) % 8; };

  if (active(0) && (tp < 0 || tm < 0 || l < 0)) return false;
  if (active(1) && tp + tm < l) return false;
  if (active(2) && (tp + tm + l) % 2 != 0) return false;
  if (active(3) && delta == 0 && mod8(sig) % 4 != 0) return false;
  if (active(4) && l == 0 && !(delta == 0 && mod8(sig) == 0)) return false;
  if (active(5) && l == 1 && !(mod8(sig) == 1 || mod8(sig) == 7)) return false;
  if (active(6) && l == 2 && mod8(sig) == 4 && delta != 0) return false;
  if (active(7) && delta == 0 && l == tp + tm && mod8(sig) != 0) return false;
  return true;
}

std::string to_string(EmbeddingStatus s) {
  switch (s) {
    case EmbeddingStatus::No: return "No";
    case EmbeddingStatus::Yes: return "Yes";
    case EmbeddingStatus::YesUnique: return "YesUnique";
    case EmbeddingStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PotentiallyIrrational: return "PotentiallyIrrational";
    case Verdict::AssociatedK3: return "AssociatedK3";
    case Verdict::AssociatedK3Unique: return "AssociatedK3Unique";
    case Verdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

namespace {

void check_transcendental_shape(const IntegerLattice& t) {
  if (!t.is_even()) fail("OddLattice", "transcendental lattice must be even");
  if (!t.is_nondegenerate()) fail("Degenerate", "transcendental lattice must be nondegenerate");
  const int n = static_cast<int>(t.rank());
  if (n < 2 || n > 22) {
    fail("WrongSignature", "rank must lie in 2..22");
  }
  Signature sig = signature(t);
  if (sig.minus != 2 || sig.plus != n - 2) {
    fail("WrongSignature", "signature must be (rank-2, 2)");
  }
}

}  // namespace

EmbeddingStatus k3_embedding_status(const IntegerLattice& t) {
  check_transcendental_shape(t);
  const int rho = 22 - static_cast<int>(t.rank());
  const int ell = discriminant_group(t).length();

  if (ell > std::min(rho, 22 - rho)) return EmbeddingStatus::No;
  if (rho >= 11) return EmbeddingStatus::Yes;
  if (ell <= rho - 2) return EmbeddingStatus::YesUnique;
  if (ell <= rho - 1) return EmbeddingStatus::Yes;
  // Boundary case ell == rho: decidable when the discriminant group is
  // 2-elementary, via existence of the complementary lattice of signature
  // (rho - 1, 1).
  if (ell == rho) {
    FiniteAbelianGroup g = discriminant_group(t);
    bool two_elem = std::all_of(g.invariant_factors.begin(), g.invariant_factors.end(),
                                [](const Int& f) { return f == 2; });
    if (two_elem) {
      auto [l2, delta] = two_elementary_invariants(discriminant_form(t));
      (void)l2;
      TwoElemInvariants m{rho - 1, 1, rho, delta};
      return two_elementary_exists(m) ? EmbeddingStatus::Yes : EmbeddingStatus::No;
    }
  }
  return EmbeddingStatus::Undecided;
}

Rat kappa(int rho, const Int& d) {
  if (d <= 0) fail("NonPositiveD", "discriminant must be positive");
  Int num = 1;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(rho));
  return make_rat(num, d);
}

bool hassett_rho1(const Int& d) {
  Int r = int_mod(d, 6);
  if (r != 0 && r != 2) {
    fail("InvalidDiscriminant", "rank-1 discriminants are 0 or 2 mod 6");
  }
  if (d % 9 == 0) return true;
  if (d % 4 == 0) return true;
  Int rest = d;
  while (rest % 2 == 0) rest /= 2;
  for (Int p = 3; p * p <= rest; p = p + 2) {
    if (rest % p != 0) continue;
    if (p % 3 == 2) return true;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1 && rest % 3 == 2) return true;
  return false;
}

ClassificationReport classify(const IntegerLattice& t) {
  check_transcendental_shape(t);
  ClassificationReport rep;
  rep.rho = 22 - static_cast<int>(t.rank());
  FiniteAbelianGroup g = discriminant_group(t);
  rep.ell = g.length();
  rep.d = abs(determinant(t));
  rep.kappa = kappa(rep.rho, rep.d);

  EmbeddingStatus status = k3_embedding_status(t);
  switch (status) {
    case EmbeddingStatus::No:
      rep.verdict = Verdict::PotentiallyIrrational;
      if (rep.ell > std::min(rep.rho, 22 - rep.rho)) {
        rep.reasons.push_back("no primitive embedding: l > min(rho, 22 - rho)");
      } else {
        rep.reasons.push_back(
            "no primitive embedding: boundary case l = rho fails the 2-elementary "
            "existence test for the complement of signature (rho-1, 1)");
      }
      break;
    case EmbeddingStatus::YesUnique:
      rep.verdict = Verdict::AssociatedK3Unique;
      rep.reasons.push_back("unique primitive embedding: l <= rho - 2");
      break;
    case EmbeddingStatus::Yes:
      rep.verdict = Verdict::AssociatedK3;
      if (rep.rho >= 11) {
        rep.reasons.push_back("primitive embedding exists: rho >= 11");
      } else if (rep.ell <= rep.rho - 1) {
        rep.reasons.push_back("primitive embedding exists: l <= rho - 1");
      } else {
        rep.reasons.push_back(
            "primitive embedding exists: boundary case l = rho passes the 2-elementary "
            "existence test for the complement of signature (rho-1, 1)");
      }
      break;
    case EmbeddingStatus::Undecided:
      rep.verdict = Verdict::Undecided;
      rep.reasons.push_back("boundary case l = rho with non-2-elementary discriminant group");
      break;
  }

  if (rep.verdict == Verdict::Undecided && rep.rho == 1) {
    Int r = int_mod(rep.d, 6);
    if (r == 0 || r == 2) {
      if (hassett_rho1(rep.d)) {
        rep.verdict = Verdict::PotentiallyIrrational;
        rep.reasons.push_back(
            "rank-1 discriminant criterion: d is divisible by 9, by 4, or by an odd "
            "prime p = 2 mod 3");
      } else {
        rep.verdict = Verdict::AssociatedK3;
        rep.reasons.push_back(
            "rank-1 discriminant criterion: d has no factor 9, 4, or odd prime p = 2 mod 3");
      }
    }
  }
  return rep;
}

EnumerationResult enumerate_2elem_candidates(std::uint8_t skip_mask) {
  EnumerationResult out;
  for (int delta = 0; delta <= 1; ++delta) {
    for (int rho = 1; rho <= 10; ++rho) {
      TwoElemInvariants t{20 - rho, 2, rho, delta};
      TwoElemInvariants m{rho - 1, 1, rho, delta};
      bool t_exists = two_elementary_exists(t, skip_mask);
      bool m_exists = two_elementary_exists(m, skip_mask);
      if (delta == 0 && t_exists) out.delta0_t_exists.push_back(rho);
      if (delta == 0 && m_exists) out.delta0_m_exists.push_back(rho);
      if (t_exists && !m_exists) out.candidates.emplace_back(rho, delta);
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  return out;
}

}  // namespace lf
