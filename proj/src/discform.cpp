#include "latticeforge/discform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyclotomic.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/snf.hpp"

namespace lf {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Int> orders, std::vector<Rat> q_diag,
                                         RatMat b_matrix)
    : orders_(std::move(orders)), q_diag_(std::move(q_diag)), b_(std::move(b_matrix)) {
  const size_t k = orders_.size();
  if (q_diag_.size() != k || b_.rows() != static_cast<Index>(k) ||
      b_.cols() != static_cast<Index>(k)) {
    fail("DimensionMismatch", "inconsistent finite quadratic form data");
  }
  for (size_t i = 0; i < k; ++i) q_diag_[i] = mod_two(q_diag_[i]);
  for (Index i = 0; i < b_.rows(); ++i)
    for (Index j = 0; j < b_.cols(); ++j) b_(i, j) = mod_one(b_(i, j));
}

Int FiniteQuadraticForm::group_order() const {
  Int o = 1;
  for (const Int& n : orders_) o *= n;
  return o;
}

GroupElement FiniteQuadraticForm::zero() const {
  return GroupElement{std::vector<Int>(orders_.size(), Int(0))};
}

GroupElement FiniteQuadraticForm::reduce(std::vector<Int> coords) const {
  if (coords.size() != orders_.size()) {
    fail("DimensionMismatch", "group element has wrong number of coordinates");
  }
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = int_mod(coords[i], orders_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement FiniteQuadraticForm::add(const GroupElement& x, const GroupElement& y) const {
  std::vector<Int> c(orders_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = int_mod(x.coords[i] + y.coords[i], orders_[i]);
  return GroupElement{std::move(c)};
}

GroupElement FiniteQuadraticForm::scale(const GroupElement& x, const Int& k) const {
  std::vector<Int> c(orders_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = int_mod(k * x.coords[i], orders_[i]);
  return GroupElement{std::move(c)};
}

Int FiniteQuadraticForm::element_order(const GroupElement& x) const {
  Int o = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.coords[i].get_mpz_t(), orders_[i].get_mpz_t());
    o = lcm_int(o, orders_[i] / g);
  }
  return o;
}

Rat FiniteQuadraticForm::evaluate(const GroupElement& x) const {
  if (x.coords.size() != orders_.size()) {
    fail("DimensionMismatch", "group element has wrong number of coordinates");
  }
  Rat total = 0;
  const int k = num_generators();
  for (int i = 0; i < k; ++i) {
    total += Rat(x.coords[i] * x.coords[i]) * q_diag_[i];
    for (int j = i + 1; j < k; ++j) {
      total += 2 * Rat(x.coords[i] * x.coords[j]) * b_(i, j);
    }
  }
  return mod_two(total);
}

Rat FiniteQuadraticForm::bilinear(const GroupElement& x, const GroupElement& y) const {
  if (x.coords.size() != orders_.size() || y.coords.size() != orders_.size()) {
    fail("DimensionMismatch", "group element has wrong number of coordinates");
  }
  Rat total = 0;
  const int k = num_generators();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      total += Rat(x.coords[i] * y.coords[j]) * b_(i, j);
    }
  }
  return mod_one(total);
}

void FiniteQuadraticForm::for_each_element(const std::function<void(const GroupElement&)>& fn,
                                           const Int& max_order) const {
  if (group_order() > max_order) {
    fail("GroupTooLarge", "group order exceeds enumeration bound");
  }
  GroupElement x = zero();
  const size_t k = orders_.size();
  while (true) {
    fn(x);
    size_t i = 0;
    while (i < k) {
      x.coords[i] += 1;
      if (x.coords[i] < orders_[i]) break;
      x.coords[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
}

DiscriminantForm discriminant_form_full(const IntegerLattice& lattice) {
  if (!lattice.is_nondegenerate()) {
    fail("Degenerate", "discriminant form requires a nondegenerate lattice");
  }
  if (!lattice.is_even()) {
    fail("OddLattice", "the discriminant quadratic form is defined for even lattices");
  }
  const Index n = lattice.rank();
  SnfResult snf = smith_normal_form(lattice.gram());

  std::vector<Index> gens;
  for (Index i = 0; i < n; ++i) {
    if (snf.d(i, i) > 1) gens.push_back(i);
  }
  const int k = static_cast<int>(gens.size());

  // Generator i corresponds to the dual vector col_i(V) / d_i in lattice
  // basis coordinates.
  RatMat lifts(n, k);
  std::vector<Int> orders(static_cast<size_t>(k));
  for (int a = 0; a < k; ++a) {
    const Index i = gens[static_cast<size_t>(a)];
    orders[static_cast<size_t>(a)] = snf.d(i, i);
    for (Index r = 0; r < n; ++r) {
      lifts(r, a) = make_rat(snf.v(r, i), snf.d(i, i));
    }
  }

  RatMat gram_q = lattice.gram().cast<Rat>();
  std::vector<Rat> q_diag(static_cast<size_t>(k));
  RatMat b(k, k);
  for (int a = 0; a < k; ++a) {
    RatVec ga = gram_q * lifts.col(a);
    for (int c = 0; c < k; ++c) {
      Rat val = 0;
      for (Index r = 0; r < n; ++r) val += lifts(r, c) * ga(r);
      if (a == c) {
        q_diag[static_cast<size_t>(a)] = mod_two(val);
        b(a, a) = mod_one(val);
      } else {
        b(a, c) = mod_one(val);
      }
    }
  }
  return DiscriminantForm{FiniteQuadraticForm(std::move(orders), std::move(q_diag), std::move(b)),
                          std::move(lifts)};
}

FiniteQuadraticForm discriminant_form(const IntegerLattice& lattice) {
  return discriminant_form_full(lattice).form;
}

FiniteQuadraticForm p_primary_part(const FiniteQuadraticForm& q, const Int& p) {
  const int k = q.num_generators();
  std::vector<int> keep;
  std::vector<Int> cofactors;
  std::vector<Int> orders;
  for (int i = 0; i < k; ++i) {
    Int rest = q.orders()[static_cast<size_t>(i)];
    Int part = 1;
    while (rest % p == 0) {
      part *= p;
      rest /= p;
    }
    if (part > 1) {
      keep.push_back(i);
      cofactors.push_back(rest);
      orders.push_back(part);
    }
  }
  const int m = static_cast<int>(keep.size());
  std::vector<Rat> q_diag(static_cast<size_t>(m));
  RatMat b(m, m);
  for (int a = 0; a < m; ++a) {
    const Rat ca(cofactors[static_cast<size_t>(a)]);
    q_diag[static_cast<size_t>(a)] =
        mod_two(ca * ca * q.q_diag()[static_cast<size_t>(keep[static_cast<size_t>(a)])]);
    for (int c = 0; c < m; ++c) {
      b(a, c) = mod_one(ca * Rat(cofactors[static_cast<size_t>(c)]) *
                        q.b_matrix()(keep[static_cast<size_t>(a)], keep[static_cast<size_t>(c)]));
    }
  }
  return FiniteQuadraticForm(std::move(orders), std::move(q_diag), std::move(b));
}

DiscriminantForm p_primary_part(const DiscriminantForm& d, const Int& p) {
  FiniteQuadraticForm part = p_primary_part(d.form, p);
  // Reconstruct which generators survived and with which cofactor.
  const int k = d.form.num_generators();
  RatMat lifts(d.lifts.rows(), part.num_generators());
  int out = 0;
  for (int i = 0; i < k; ++i) {
    Int rest = d.form.orders()[static_cast<size_t>(i)];
    while (rest % p == 0) rest /= p;
    if (rest == d.form.orders()[static_cast<size_t>(i)]) continue;  // no p-part
    lifts.col(out) = d.lifts.col(i) * Rat(rest);
    ++out;
  }
  return DiscriminantForm{std::move(part), std::move(lifts)};
}

std::pair<int, int> two_elementary_invariants(const FiniteQuadraticForm& q) {
  for (const Int& n : q.orders()) {
    if (n != 2) fail("NotTwoElementary", "group has an invariant factor different from 2");
  }
  int delta = 0;
  for (const Rat& v : q.q_diag()) {
    if (v.get_den() != 1) {
      delta = 1;
      break;
    }
  }
  return {q.num_generators(), delta};
}

int milgram_signature(const FiniteQuadraticForm& q, const Int& max_order) {
  const Int order = q.group_order();
  if (order > max_order) fail("GroupTooLarge", "group order exceeds enumeration bound");

  // Collect q(x)/2 mod 1 over the whole group; choose the root-of-unity
  // order N so that all angles, the eighth roots, and the quadratic Gauss
  // sums for odd primes dividing |A| are representable.
  std::vector<Rat> angles;
  q.for_each_element([&](const GroupElement& x) { angles.push_back(mod_one(q.evaluate(x) / 2)); },
                     max_order);

  Int den_lcm = 8;
  for (const Rat& a : angles) den_lcm = lcm_int(den_lcm, Int(a.get_den()));

  // Square / squarefree split of |A|.
  Int square_root = 1, squarefree = 1;
  {
    Int rest = order;
    for (Int p = 2; p * p <= rest; p = (p == 2 ? Int(3) : Int(p + 2))) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      for (int i = 0; i + 1 < e; i += 2) square_root *= p;
      if (e % 2 == 1) squarefree *= p;
    }
    if (rest > 1) squarefree *= rest;
  }
  {
    Int rest = squarefree;
    if (rest % 2 == 0) rest /= 2;  // the factor 8 is already in den_lcm
    for (Int p = 3; p <= rest; p = p + 2) {
      if (rest % p != 0) continue;
      den_lcm = lcm_int(den_lcm, p);
      rest /= p;
    }
  }

  if (!den_lcm.fits_slong_p()) fail("GroupTooLarge", "cyclotomic order overflow");
  const long n_root = den_lcm.get_si();

  detail::CircPoly gauss_sum(n_root);
  for (const Rat& a : angles) {
    const Int step = den_lcm / Int(a.get_den());
    Int e = Int(a.get_num()) * step;
    detail::add_monomial(gauss_sum, int_mod(e, den_lcm).get_si(), 1);
  }

  // sqrt(|A|) = square_root * sqrt(squarefree), built from sqrt(2) =
  // zeta_8 + zeta_8^7 and quadratic Gauss sums for odd primes.
  detail::CircPoly root(n_root);
  detail::add_monomial(root, 0, square_root);
  Int rest = squarefree;
  if (rest % 2 == 0) {
    detail::CircPoly sqrt2(n_root);
    detail::add_monomial(sqrt2, n_root / 8, 1);
    detail::add_monomial(sqrt2, 7 * (n_root / 8), 1);
    root = detail::mul(root, sqrt2);
    rest /= 2;
  }
  for (Int p = 3; p <= rest; p = p + 2) {
    if (rest % p != 0) continue;
    detail::CircPoly g(n_root);
    const long pl = p.get_si();
    const long step = n_root / pl;
    for (long t = 1; t < pl; ++t) {
      int chi = mpz_si_kronecker(t, p.get_mpz_t());
      detail::add_monomial(g, t * step, chi);
    }
    if (p % 4 == 3) {
      // The sum equals i*sqrt(p); multiply by -i.
      detail::CircPoly minus_i(n_root);
      detail::add_monomial(minus_i, 3 * (n_root / 4), 1);
      g = detail::mul(g, minus_i);
    }
    root = detail::mul(root, g);
    rest /= p;
  }

  for (int sigma = 0; sigma < 8; ++sigma) {
    detail::CircPoly candidate = root;
    detail::CircPoly eighth(n_root);
    detail::add_monomial(eighth, sigma * (n_root / 8), 1);
    candidate = detail::mul(candidate, eighth);
    if (detail::vanishes_at_primitive_root(detail::sub(gauss_sum, candidate))) {
      return sigma;
    }
  }
  fail("DegenerateForm", "Gauss sum does not have magnitude sqrt(|A|)");
}

namespace {

// Shared backtracking order: candidate images sorted by (q value, coords).
struct CandidateOrder {
  bool operator()(const std::pair<Rat, std::vector<Int>>& a,
                  const std::pair<Rat, std::vector<Int>>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

}  // namespace

std::optional<std::vector<GroupElement>> find_anti_isometry(const FiniteQuadraticForm& q1,
                                                            const FiniteQuadraticForm& q2,
                                                            const Int& max_order) {
  if (q1.orders() != q2.orders()) return std::nullopt;
  if (q1.group_order() > max_order) fail("GroupTooLarge", "group order exceeds search bound");
  if (q1.is_trivial()) return std::vector<GroupElement>{};

  std::vector<GroupElement> elements;
  q2.for_each_element([&](const GroupElement& x) { elements.push_back(x); }, max_order);

  // Deterministic candidate order: ascending q value, then lexicographic.
  std::sort(elements.begin(), elements.end(), [&](const GroupElement& a, const GroupElement& b) {
    Rat qa = q2.evaluate(a), qb = q2.evaluate(b);
    if (qa != qb) return qa < qb;
    return a.coords < b.coords;
  });

  const int k = q1.num_generators();
  std::vector<GroupElement> images;
  std::set<std::vector<Int>> span;
  span.insert(q2.zero().coords);

  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == k) return true;
    const GroupElement gi{[&] {
      std::vector<Int> c(static_cast<size_t>(k), Int(0));
      c[static_cast<size_t>(i)] = 1;
      return c;
    }()};
    const Int ni = q1.orders()[static_cast<size_t>(i)];
    const Rat want_q = mod_two(-q1.q_diag()[static_cast<size_t>(i)]);
    for (const GroupElement& y : elements) {
      if (ni % q2.element_order(y) != 0) continue;
      if (q2.evaluate(y) != want_q) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        Rat want_b = mod_one(-q1.b_matrix()(i, j));
        if (q2.bilinear(y, images[static_cast<size_t>(j)]) != want_b) ok = false;
      }
      if (!ok) continue;
      // The subgroup generated so far must grow by a factor of exactly n_i.
      std::set<std::vector<Int>> grown = span;
      GroupElement shift = y;
      bool full = true;
      for (Int t = 1; t < ni && full; ++t) {
        for (const auto& s : span) {
          auto sum = q2.add(GroupElement{s}, shift);
          if (!grown.insert(sum.coords).second) {
            full = false;
            break;
          }
        }
        shift = q2.add(shift, y);
      }
      if (!full) continue;
      images.push_back(y);
      std::swap(span, grown);
      if (extend(i + 1)) return true;
      std::swap(span, grown);
      images.pop_back();
    }
    return false;
  };

  if (extend(0)) return images;
  return std::nullopt;
}

FiniteQuadraticForm subgroup_perp_quotient(const FiniteQuadraticForm& q,
                                           const std::vector<GroupElement>& h,
                                           const Int& max_order) {
  if (h.empty()) return q;
  const int k = q.num_generators();

  // Span of H, with isotropy check on every element.
  std::set<std::vector<Int>> span;
  span.insert(q.zero().coords);
  for (const GroupElement& gen : h) {
    if (static_cast<int>(gen.coords.size()) != k) {
      fail("DimensionMismatch", "glue generator has wrong number of coordinates");
    }
    std::set<std::vector<Int>> grown;
    for (const auto& s : span) {
      GroupElement cur{s};
      while (grown.insert(cur.coords).second) {
        cur = q.add(cur, gen);
        if (Int(static_cast<long>(grown.size())) > max_order) {
          fail("GroupTooLarge", "glue subgroup exceeds enumeration bound");
        }
      }
    }
    span = std::move(grown);
  }
  for (const auto& sc : span) {
    GroupElement s{sc};
    if (q.evaluate(s) != 0) fail("NotIsotropic", "q does not vanish on the glue subgroup");
    for (const auto& tc : span) {
      if (q.bilinear(s, GroupElement{tc}) != 0) {
        fail("NotIsotropic", "b does not vanish on the glue subgroup");
      }
    }
  }

  // H^perp as a lattice L1 = {x in Z^k : b(x, h) in Z for all h in H},
  // computed from the integer kernel of the stacked congruence system.
  const int s = static_cast<int>(h.size());
  Int d = 1;
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < k; ++i) {
      Rat bij = q.bilinear(GroupElement{[&] {
                             std::vector<Int> c(static_cast<size_t>(k), Int(0));
                             c[static_cast<size_t>(i)] = 1;
                             return c;
                           }()},
                           h[static_cast<size_t>(j)]);
      d = lcm_int(d, Int(bij.get_den()));
    }
  }
  IntMat system(s, k + s);
  system.setZero();
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < k; ++i) {
      std::vector<Int> c(static_cast<size_t>(k), Int(0));
      c[static_cast<size_t>(i)] = 1;
      Rat bij = q.bilinear(GroupElement{std::move(c)}, h[static_cast<size_t>(j)]);
      system(j, i) = Int(bij.get_num()) * (d / Int(bij.get_den()));
    }
    system(j, k + j) = d;
  }
  IntMat kernel = integer_kernel(system);
  // Rows of `sol` generate L1 (they automatically contain diag(orders) Z^k).
  IntMat sol(kernel.cols(), k);
  for (Index c = 0; c < kernel.cols(); ++c) {
    for (int i = 0; i < k; ++i) sol(c, i) = kernel(i, c);
  }
  IntMat basis = hermite_normal_form(sol);  // k x k, full rank

  // L2 = lifts of H + diag(orders) Z^k, expressed in the basis of L1.
  IntMat l2(k, s + k);
  l2.setZero();
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < k; ++i) l2(i, j) = h[static_cast<size_t>(j)].coords[static_cast<size_t>(i)];
  }
  for (int i = 0; i < k; ++i) l2(i, s + i) = q.orders()[static_cast<size_t>(i)];

  // X = basis^-T * l2, exact and integral because L2 is a sublattice of L1.
  RatMat bt = basis.transpose().cast<Rat>();
  IntMat x(k, s + k);
  for (Index col = 0; col < l2.cols(); ++col) {
    // Forward-substitution style exact solve bt * v = l2.col(col).
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) rhs(i) = Rat(l2(i, col));
    RatVec v(k);
    // bt is lower triangular? basis is in row echelon (upper-triangular-ish)
    // form, but not strictly; do a generic rational solve via Gaussian
    // elimination on a copy.
    RatMat a = bt;
    for (int piv = 0; piv < k; ++piv) {
      int pr = piv;
      while (pr < k && a(pr, piv) == 0) ++pr;
      if (pr == k) fail("Degenerate", "singular basis in quotient computation");
      if (pr != piv) {
        a.row(piv).swap(a.row(pr));
        std::swap(rhs(piv), rhs(pr));
      }
      for (int r = piv + 1; r < k; ++r) {
        if (a(r, piv) == 0) continue;
        Rat f = a(r, piv) / a(piv, piv);
        a.row(r) -= f * a.row(piv);
        rhs(r) -= f * rhs(piv);
      }
    }
    for (int r = k - 1; r >= 0; --r) {
      Rat acc = rhs(r);
      for (int c2 = r + 1; c2 < k; ++c2) acc -= a(r, c2) * v(c2);
      v(r) = acc / a(r, r);
    }
    for (int i = 0; i < k; ++i) {
      if (Rat(v(i)).get_den() != 1) fail("Internal", "H is not contained in H^perp lattice");
      x(i, col) = Int(v(i).get_num());
    }
  }

  SnfResult snf = smith_normal_form(x);

  // Quotient generator i lifts to basis^T * (u^-1 e_i); u is unimodular, so
  // its inverse is integral.
  RatMat uinv_r = RatMat::Identity(k, k);
  {
    RatMat a = snf.u.cast<Rat>();
    for (int piv = 0; piv < k; ++piv) {
      int pr = piv;
      while (pr < k && a(pr, piv) == 0) ++pr;
      if (pr != piv) {
        a.row(piv).swap(a.row(pr));
        uinv_r.row(piv).swap(uinv_r.row(pr));
      }
      Rat inv = 1 / a(piv, piv);
      a.row(piv) *= inv;
      uinv_r.row(piv) *= inv;
      for (int r = 0; r < k; ++r) {
        if (r == piv || a(r, piv) == 0) continue;
        Rat f = a(r, piv);
        a.row(r) -= f * a.row(piv);
        uinv_r.row(r) -= f * uinv_r.row(piv);
      }
    }
  }

  std::vector<Int> orders;
  std::vector<GroupElement> gens;
  for (int i = 0; i < k; ++i) {
    const Int di = snf.d(i, i);
    if (di <= 1) continue;
    std::vector<Int> coords(static_cast<size_t>(k), Int(0));
    for (int r = 0; r < k; ++r) {
      Rat acc = 0;
      for (int c2 = 0; c2 < k; ++c2) acc += Rat(basis(c2, r)) * uinv_r(c2, i);
      if (acc.get_den() != 1) fail("Internal", "non-integral quotient generator");
      coords[static_cast<size_t>(r)] = Int(acc.get_num());
    }
    orders.push_back(di);
    gens.push_back(q.reduce(std::move(coords)));
  }

  const int m = static_cast<int>(orders.size());
  std::vector<Rat> q_diag(static_cast<size_t>(m));
  RatMat b(m, m);
  for (int a2 = 0; a2 < m; ++a2) {
    q_diag[static_cast<size_t>(a2)] = q.evaluate(gens[static_cast<size_t>(a2)]);
    for (int c2 = 0; c2 < m; ++c2) {
      b(a2, c2) = q.bilinear(gens[static_cast<size_t>(a2)], gens[static_cast<size_t>(c2)]);
    }
  }
  return FiniteQuadraticForm(std::move(orders), std::move(q_diag), std::move(b));
}

Int orthogonal_group_order(const FiniteQuadraticForm& q) {
  for (const Int& n : q.orders()) {
    if (n != 2) fail("NotTwoElementary", "orthogonal group count requires a 2-elementary form");
  }
  const int l = q.num_generators();
  if (l > 8) fail("GroupTooLarge", "orthogonal group count capped at 8 generators");
  if (l == 0) return 1;

  const unsigned total = 1u << l;
  // 2*q(x) in {0,1,2,3} and 2*b(x,y) in {0,1} for all masks, built by the
  // polarization identity.
  std::vector<int> twoq(total, 0);
  std::vector<std::vector<int>> bgen(static_cast<size_t>(l), std::vector<int>(total, 0));
  for (int i = 0; i < l; ++i) {
    Rat qi = mod_two(q.q_diag()[static_cast<size_t>(i)]);
    Rat doubled = 2 * qi;  // integer in {0,1,2,3} for order-2 generators
    twoq[1u << i] = static_cast<int>(Int(doubled.get_num()).get_si() % 4);
  }
  for (int i = 0; i < l; ++i) {
    for (unsigned y = 0; y < total; ++y) {
      int acc = 0;
      for (int j = 0; j < l; ++j) {
        if (!(y & (1u << j))) continue;
        Rat doubled = 2 * q.b_matrix()(i, j);  // integer in {0,1}
        acc += static_cast<int>(Int(doubled.get_num()).get_si());
      }
      bgen[static_cast<size_t>(i)][y] = acc % 2;
    }
  }
  for (unsigned x = 1; x < total; ++x) {
    unsigned low = x & (x - 1);
    if (low == 0) continue;  // single bit, already set
    unsigned bit = x ^ low;
    int i = 0;
    while (!((bit >> i) & 1u)) ++i;
    twoq[x] = (twoq[low] + twoq[bit] + 2 * bgen[static_cast<size_t>(i)][low]) % 4;
  }
  auto bval = [&](unsigned x, unsigned y) {
    int acc = 0;
    for (int i = 0; i < l; ++i) {
      if (x & (1u << i)) acc ^= bgen[static_cast<size_t>(i)][y];
    }
    return acc;
  };

  std::vector<unsigned> images;
  std::vector<unsigned> reduced;  // row-reduced basis of chosen images
  Int count = 0;

  std::function<void(int)> walk = [&](int i) {
    if (i == l) {
      count += 1;
      return;
    }
    for (unsigned y = 1; y < total; ++y) {
      if (twoq[y] != twoq[1u << i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (bval(y, images[static_cast<size_t>(j)]) != bgen[static_cast<size_t>(i)][1u << j]) {
          ok = false;
        }
      }
      if (!ok) continue;
      // Linear independence over F_2, via an xor basis with distinct
      // leading bits.
      unsigned r = y;
      for (unsigned base : reduced) {
        if ((r ^ base) < r) r ^= base;
      }
      if (r == 0) continue;
      images.push_back(y);
      reduced.push_back(r);
      walk(i + 1);
      images.pop_back();
      reduced.pop_back();
    }
  };
  walk(0);
  return count;
}

}  // namespace lf
