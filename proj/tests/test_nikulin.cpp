#include <doctest.h>

#include "latticeforge/catalog.hpp"
#include "latticeforge/discform.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/nikulin.hpp"

using namespace lf;

TEST_CASE("existence test accepts invariants of known 2-elementary lattices") {
  // (t+, t-, l, delta) read off U, U(2), D4, E7, E8, A1 and sums.
  CHECK(two_elementary_exists({1, 1, 0, 0}));   // U
  CHECK(two_elementary_exists({1, 1, 2, 0}));   // U(2)
  CHECK(two_elementary_exists({4, 0, 2, 0}));   // D4
  CHECK(two_elementary_exists({7, 0, 1, 1}));   // E7
  CHECK(two_elementary_exists({8, 0, 0, 0}));   // E8
  CHECK(two_elementary_exists({1, 0, 1, 1}));   // A1
  CHECK(two_elementary_exists({14, 2, 6, 0}));  // 3*D4 + 2*U
}

TEST_CASE("existence test rejects impossible invariants") {
  CHECK(!two_elementary_exists({-1, 0, 0, 0}));  // negative count
  CHECK(!two_elementary_exists({1, 0, 2, 1}));   // l > rank
  CHECK(!two_elementary_exists({2, 1, 0, 0}));   // parity of t+ + t- + l
  CHECK(!two_elementary_exists({2, 0, 2, 0}));   // delta=0 needs sig = 0 mod 4
  CHECK(!two_elementary_exists({1, 0, 0, 1}));   // l=0 forces delta=0, sig=0 mod 8
  CHECK(!two_elementary_exists({3, 0, 1, 1}));   // l=1 needs sig = +-1 mod 8
  CHECK(!two_elementary_exists({3, 1, 2, 1}));   // l=2, sig=4 mod 8 forces delta=0
  CHECK(!two_elementary_exists({5, 1, 6, 0}));   // l=rank, delta=0 needs sig=0 mod 8
}

TEST_CASE("existence test is symmetric under swapping t+ and t-") {
  for (int tp = 0; tp <= 12; ++tp) {
    for (int tm = 0; tm <= 12; ++tm) {
      for (int l = 0; l <= 12; ++l) {
        for (int delta = 0; delta <= 1; ++delta) {
          CHECK(two_elementary_exists({tp, tm, l, delta}) ==
                two_elementary_exists({tm, tp, l, delta}));
        }
      }
    }
  }
}

TEST_CASE("skip_mask disables individual conditions") {
  CHECK(two_elementary_exists({2, 1, 1, 1}, 1u << 2));  // parity condition skipped
  CHECK(two_elementary_exists({2, 0, 2, 0}, 1u << 3));
  CHECK(two_elementary_exists({5, 1, 6, 0}, 1u << 7));
  CHECK(!two_elementary_exists({2, 1, 1, 1}));
}

TEST_CASE("enumeration returns the unique surviving pair") {
  EnumerationResult r = enumerate_2elem_candidates();
  CHECK(r.candidates == std::vector<std::pair<int, int>>{{6, 0}});
  CHECK(r.delta0_t_exists == std::vector<int>{2, 6, 10});
  CHECK(r.delta0_m_exists == std::vector<int>{2, 10});
}

TEST_CASE("disabling the boundary condition breaks the enumeration") {
  EnumerationResult r = enumerate_2elem_candidates(1u << 7);
  CHECK(r.candidates.size() != 1);
}

TEST_CASE("kappa is an exact rational") {
  CHECK(kappa(0, 3) == make_rat(1, 3));
  CHECK(kappa(6, 64) == 1);
  CHECK(kappa(6, 16) == 4);
  CHECK(kappa(10, 1) == 1024);
  CHECK_THROWS_AS(kappa(2, 0), Error);
  CHECK_THROWS_AS(kappa(2, -4), Error);
}

TEST_CASE("rank-1 discriminant criterion") {
  CHECK(hassett_rho1(8));
  CHECK(hassett_rho1(12));
  CHECK(!hassett_rho1(14));
  CHECK(hassett_rho1(18));
  CHECK(hassett_rho1(20));
  CHECK(!hassett_rho1(26));
  CHECK(hassett_rho1(32));
  CHECK(hassett_rho1(36));
  CHECK(!hassett_rho1(38));
  CHECK(!hassett_rho1(42));
  CHECK(hassett_rho1(44));
  CHECK_THROWS_AS(hassett_rho1(7), Error);
  CHECK_THROWS_AS(hassett_rho1(9), Error);
}

TEST_CASE("embedding status tiers") {
  // rank 22 -> rho = 0, so l = 1 > min(rho, 22 - rho) = 0: no embedding.
  CHECK(k3_embedding_status(lattice_from_expression("A2 + 2*E8 + 2*U")) == EmbeddingStatus::No);
  // rank 4 -> rho = 18 >= 11.
  CHECK(k3_embedding_status(lattice_from_expression("2*U")) == EmbeddingStatus::Yes);
  // rho = 6, l = 4 <= rho - 2.
  CHECK(k3_embedding_status(lattice_from_expression("D4 + E8 + U(2) + U")) ==
        EmbeddingStatus::YesUnique);
  // rho = 6 = l, 2-elementary with delta = 0: the rank-6 complement fails
  // the existence test, so there is no embedding.
  CHECK(k3_embedding_status(lattice_from_expression("3*D4 + 2*U")) == EmbeddingStatus::No);
}

TEST_CASE("classification of the flagship examples") {
  ClassificationReport very_general = classify(lattice_from_expression("A2 + 2*E8 + 2*U"));
  CHECK(very_general.rho == 0);
  CHECK(very_general.ell == 1);
  CHECK(very_general.d == 3);
  CHECK(very_general.kappa == make_rat(1, 3));
  CHECK(very_general.verdict == Verdict::PotentiallyIrrational);

  ClassificationReport extremal = classify(lattice_from_expression("3*D4 + 2*U"));
  CHECK(extremal.rho == 6);
  CHECK(extremal.ell == 6);
  CHECK(extremal.d == 64);
  CHECK(extremal.kappa == 1);
  CHECK(extremal.verdict == Verdict::PotentiallyIrrational);

  ClassificationReport embedded = classify(lattice_from_expression("D4 + E8 + U(2) + U"));
  CHECK(embedded.rho == 6);
  CHECK(embedded.ell == 4);
  CHECK(embedded.d == 16);
  CHECK(embedded.kappa == 4);
  CHECK(embedded.verdict == Verdict::AssociatedK3Unique);

  CHECK(!extremal.reasons.empty());
  CHECK(!embedded.reasons.empty());
}

TEST_CASE("classification preconditions") {
  CHECK_THROWS_AS(classify(named_lattice("E8")), Error);        // wrong signature
  CHECK_THROWS_AS(classify(named_lattice("I20,2")), Error);     // odd
  CHECK_THROWS_AS(classify(named_lattice("U")), Error);         // signature (1,1)
  CHECK_THROWS_AS(classify(IntegerLattice::from_gram(IntMat::Zero(4, 4))), Error);
}

TEST_CASE("classification is stable under unimodular basis change") {
  IntegerLattice t = lattice_from_expression("3*D4 + 2*U");
  IntMat p = IntMat::Identity(16, 16);
  p(0, 5) = 2;
  p(3, 11) = -1;
  p(15, 2) = 7;
  IntegerLattice conj = IntegerLattice::from_gram(IntMat(p * t.gram() * p.transpose()));
  ClassificationReport a = classify(t);
  ClassificationReport b = classify(conj);
  CHECK(a.rho == b.rho);
  CHECK(a.ell == b.ell);
  CHECK(a.d == b.d);
  CHECK(a.kappa == b.kappa);
  CHECK(a.verdict == b.verdict);
}
