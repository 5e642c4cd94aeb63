#include <doctest.h>

#include <set>
#include <vector>

#include "latticeforge/catalog.hpp"
#include "latticeforge/discform.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/lattice.hpp"

using namespace lf;

namespace {

const std::vector<std::string> kEvenCatalog = {
    "A1",    "A2",    "A3",    "A4",     "A5",    "D4",    "D5",     "D6",  "E6",
    "E7",    "E8",    "U",     "U(2)",   "U(3)",  "A1(2)", "A2(2)",  "D4(2)",
    "E6(2)", "A1(-1)", "A2(-1)", "D4(-1)", "E7(-1)", "A3(-2)", "<4>", "<-4>"};

}  // namespace

TEST_CASE("discriminant group order equals |det| across the catalog") {
  for (const std::string& name : kEvenCatalog) {
    IntegerLattice l = lattice_from_expression(name);
    REQUIRE(l.is_even());
    FiniteQuadraticForm q = discriminant_form(l);
    CHECK(q.group_order() == abs(l.det()));
  }
}

TEST_CASE("discriminant form preconditions") {
  CHECK_THROWS_AS(discriminant_form(named_lattice("I2,0")), Error);  // odd
  CHECK_THROWS_AS(discriminant_form(IntegerLattice::from_gram(IntMat::Zero(2, 2))), Error);
}

TEST_CASE("quadratic identity q(x+y) = q(x) + q(y) + 2b(x,y) by exhaustion") {
  for (const std::string& name : {"D4", "U(2)", "A2", "A3", "E6(2)"}) {
    FiniteQuadraticForm q = discriminant_form(lattice_from_expression(name));
    std::vector<GroupElement> all;
    q.for_each_element([&](const GroupElement& x) { all.push_back(x); });
    for (const GroupElement& x : all) {
      for (const GroupElement& y : all) {
        Rat lhs = q.evaluate(q.add(x, y));
        Rat rhs = mod_two(q.evaluate(x) + q.evaluate(y) + 2 * q.bilinear(x, y));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("lifts represent the generators") {
  for (const std::string& name : {"A2", "D4", "U(2)", "E6(2)"}) {
    IntegerLattice l = lattice_from_expression(name);
    DiscriminantForm d = discriminant_form_full(l);
    RatMat gram = l.gram().cast<Rat>();
    for (int i = 0; i < d.form.num_generators(); ++i) {
      // The lift pairs integrally with the lattice (it lies in the dual) and
      // its norm reproduces q mod 2.
      RatVec pairing = gram * d.lifts.col(i);
      for (Index r = 0; r < l.rank(); ++r) CHECK(pairing(r).get_den() == 1);
      Rat norm = (d.lifts.col(i).transpose() * gram * d.lifts.col(i))(0);
      CHECK(mod_two(norm) == d.form.q_diag()[static_cast<size_t>(i)]);
      // Order: the smallest multiple landing in the lattice.
      std::vector<Int> coords(static_cast<size_t>(d.form.num_generators()), Int(0));
      coords[static_cast<size_t>(i)] = 1;
      Int order = d.form.element_order(GroupElement{coords});
      RatVec scaled = d.lifts.col(i) * Rat(order);
      for (Index r = 0; r < l.rank(); ++r) CHECK(scaled(r).get_den() == 1);
    }
  }
}

TEST_CASE("p_primary_part splits the group and preserves the form") {
  FiniteQuadraticForm q = discriminant_form(lattice_from_expression("E6(2)"));
  FiniteQuadraticForm q2 = p_primary_part(q, 2);
  FiniteQuadraticForm q3 = p_primary_part(q, 3);
  CHECK(q2.group_order() == 64);
  CHECK(q3.group_order() == 3);
  CHECK(q2.group_order() * q3.group_order() == q.group_order());
  for (const Int& n : q2.orders()) CHECK(n == 2);
  // The 2-part inherits its q values from cofactor-scaled generators.
  for (const Rat& v : q2.q_diag()) CHECK((v.get_den() == 1 || v.get_den() == 2));
}

TEST_CASE("two_elementary_invariants") {
  auto inv = [](const std::string& expr) {
    return two_elementary_invariants(discriminant_form(lattice_from_expression(expr)));
  };
  CHECK(inv("D4") == std::pair<int, int>{2, 0});
  CHECK(inv("U(2)") == std::pair<int, int>{2, 0});
  CHECK(inv("A1") == std::pair<int, int>{1, 1});
  CHECK(inv("E7") == std::pair<int, int>{1, 1});
  CHECK(inv("3*D4 + 2*U") == std::pair<int, int>{6, 0});
  CHECK_THROWS_AS(two_elementary_invariants(discriminant_form(named_lattice("A2"))), Error);
}

TEST_CASE("milgram signature matches lattice signature mod 8") {
  for (const std::string& name : kEvenCatalog) {
    IntegerLattice l = lattice_from_expression(name);
    if (abs(l.det()) > (Int(1) << 12)) continue;
    Signature sig = signature(l);
    int expected = ((sig.plus - sig.minus) % 8 + 8) % 8;
    CHECK(milgram_signature(discriminant_form(l)) == expected);
  }
}

TEST_CASE("anti-isometry between opposite forms, none within a definite pair") {
  FiniteQuadraticForm qa = discriminant_form(named_lattice("A1"));
  FiniteQuadraticForm qb = discriminant_form(lattice_from_expression("A1(-1)"));
  auto phi = find_anti_isometry(qa, qb);
  REQUIRE(phi.has_value());
  CHECK(phi->size() == 1);
  CHECK(!find_anti_isometry(qa, qa).has_value());

  FiniteQuadraticForm qd = discriminant_form(named_lattice("D4"));
  FiniteQuadraticForm qdm = discriminant_form(lattice_from_expression("D4(-1)"));
  auto psi = find_anti_isometry(qd, qdm);
  REQUIRE(psi.has_value());
  // Exhaustive verification of the defining identities on the whole group.
  std::vector<GroupElement> all;
  qd.for_each_element([&](const GroupElement& x) { all.push_back(x); });
  auto map = [&](const GroupElement& x) {
    GroupElement out = qdm.zero();
    for (size_t i = 0; i < psi->size(); ++i) {
      out = qdm.add(out, qdm.scale((*psi)[i], x.coords[i]));
    }
    return out;
  };
  for (const GroupElement& x : all) {
    CHECK(qdm.evaluate(map(x)) == mod_two(-qd.evaluate(x)));
    for (const GroupElement& y : all) {
      CHECK(qdm.bilinear(map(x), map(y)) == mod_one(-qd.bilinear(x, y)));
    }
  }
  // Bijectivity: images are pairwise distinct.
  std::set<std::vector<Int>> seen;
  for (const GroupElement& x : all) CHECK(seen.insert(map(x).coords).second);
}

TEST_CASE("anti-isometry rejects mismatched groups") {
  CHECK(!find_anti_isometry(discriminant_form(named_lattice("A2")),
                            discriminant_form(named_lattice("D4")))
             .has_value());
}

TEST_CASE("subgroup_perp_quotient sizes and the trivial subgroup") {
  FiniteQuadraticForm q = discriminant_form(lattice_from_expression("D4 + D4(-1)"));
  CHECK(subgroup_perp_quotient(q, {}).group_order() == q.group_order());

  // Graph of an anti-isometry: isotropic of order 4; quotient has order
  // 16 / 4^2 = 1.
  FiniteQuadraticForm qd = discriminant_form(named_lattice("D4"));
  FiniteQuadraticForm qdm = discriminant_form(lattice_from_expression("D4(-1)"));
  auto psi = find_anti_isometry(qd, qdm);
  REQUIRE(psi.has_value());
  std::vector<GroupElement> h;
  for (size_t i = 0; i < psi->size(); ++i) {
    std::vector<Int> coords(4, Int(0));
    coords[i] = 1;
    coords[2 + 0] = (*psi)[i].coords[0];
    coords[2 + 1] = (*psi)[i].coords[1];
    h.push_back(GroupElement{coords});
  }
  FiniteQuadraticForm quotient = subgroup_perp_quotient(q, h);
  CHECK(quotient.group_order() == 1);

  // A non-isotropic generator is rejected.
  std::vector<Int> bad(4, Int(0));
  bad[0] = 1;
  CHECK_THROWS_AS(subgroup_perp_quotient(q, {GroupElement{bad}}), Error);
}

TEST_CASE("subgroup_perp_quotient on a proper isotropic subgroup") {
  // In q_{U(2)} + q_{U(2)} the element (e1, f1) pairs to q = 0 + 0 = 0 and
  // is isotropic; |H| = 2, so the quotient has order 16/4 = 4.
  FiniteQuadraticForm q = discriminant_form(lattice_from_expression("2*U(2)"));
  REQUIRE(q.group_order() == 16);
  std::vector<Int> coords(4, Int(0));
  coords[0] = 1;
  coords[2] = 1;
  GroupElement g{coords};
  REQUIRE(q.evaluate(g) == 0);
  FiniteQuadraticForm quotient = subgroup_perp_quotient(q, {g});
  CHECK(quotient.group_order() == 4);
}

TEST_CASE("orthogonal group orders of small 2-elementary forms") {
  // oracle: A_{D4} has three nonzero elements, all of q-value 1 and mutual
  // b-value 1/2, so O(q) is the full GL(2, F2) of order 6. In A_{U(2)} the
  // two q = 0 elements can swap while the q = 1 element is fixed: order 2.
  CHECK(orthogonal_group_order(discriminant_form(named_lattice("D4"))) == 6);
  CHECK(orthogonal_group_order(discriminant_form(lattice_from_expression("U(2)"))) == 2);
  CHECK(orthogonal_group_order(discriminant_form(named_lattice("A1"))) == 1);
  CHECK(orthogonal_group_order(FiniteQuadraticForm{}) == 1);
  CHECK_THROWS_AS(orthogonal_group_order(discriminant_form(named_lattice("A2"))), Error);
}
