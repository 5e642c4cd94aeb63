#include "latticeforge/embeddings.hpp"

#include <set>
#include <vector>

#include "latticeforge/errors.hpp"
#include "latticeforge/snf.hpp"

namespace lf {

IntegerLattice overlattice(const GlueData& glue) {
  const IntegerLattice& base = glue.base;
  if (!base.is_even()) fail("OddLattice", "overlattice construction requires an even base");
  if (!base.is_nondegenerate()) fail("Degenerate", "overlattice requires a nondegenerate base");
  const Index n = base.rank();
  if (glue.generators.cols() != n) {
    fail("DimensionMismatch", "glue vectors must have one coordinate per basis vector");
  }

  const RatMat gram_q = base.gram().cast<Rat>();
  const Index s = glue.generators.rows();

  // Every glue vector must pair integrally with the base, i.e. lie in the
  // dual lattice.
  for (Index j = 0; j < s; ++j) {
    RatVec pairing = gram_q * glue.generators.row(j).transpose();
    for (Index i = 0; i < n; ++i) {
      if (pairing(i).get_den() != 1) {
        fail("NotFiniteIndex", "glue vector is not in the dual lattice");
      }
    }
  }

  // The glue vectors generate a subgroup H of the discriminant group; the
  // overlattice is integral and even exactly when H is isotropic. Enumerate
  // H via coordinates mod Z^n.
  {
    auto frac = [&](const RatVec& v) {
      std::vector<Rat> key(static_cast<size_t>(n));
      for (Index i = 0; i < n; ++i) key[static_cast<size_t>(i)] = mod_one(v(i));
      return key;
    };
    std::set<std::vector<Rat>> span;
    std::set<std::vector<Rat>> reps_seen;
    std::vector<RatVec> reps;
    RatVec zero = RatVec::Zero(n);
    span.insert(frac(zero));
    reps_seen.insert(frac(zero));
    reps.push_back(zero);
    for (Index j = 0; j < s; ++j) {
      RatVec g = glue.generators.row(j).transpose();
      std::vector<RatVec> grown = reps;
      std::set<std::vector<Rat>> grown_keys = reps_seen;
      for (const RatVec& r : reps) {
        RatVec cur = r;
        while (true) {
          cur = cur + g;
          auto key = frac(cur);
          if (!grown_keys.insert(key).second) break;
          grown.push_back(cur);
          if (grown.size() > (1u << 20)) fail("GroupTooLarge", "glue subgroup too large");
        }
      }
      reps = std::move(grown);
      reps_seen = std::move(grown_keys);
    }
    for (const RatVec& r : reps) {
      Rat norm = (r.transpose() * gram_q * r)(0);
      if (mod_two(norm) != 0) fail("NotIsotropic", "glue subgroup is not isotropic for q");
      for (const RatVec& t : reps) {
        Rat pair = (r.transpose() * gram_q * t)(0);
        if (mod_one(pair) != 0) fail("NotIsotropic", "glue subgroup is not isotropic for b");
      }
    }
  }

  // Common denominator D; the overlattice is (1/D) * rowlattice([D*I; D*W]).
  Int d = 1;
  for (Index j = 0; j < s; ++j) {
    for (Index i = 0; i < n; ++i) {
      Int den = Int(glue.generators(j, i).get_den());
      Int g;
      mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
      d = g;
    }
  }
  IntMat stacked(n + s, n);
  stacked.setZero();
  for (Index i = 0; i < n; ++i) stacked(i, i) = d;
  for (Index j = 0; j < s; ++j) {
    for (Index i = 0; i < n; ++i) {
      Rat scaled = glue.generators(j, i) * Rat(d);
      stacked(n + j, i) = Int(scaled.get_num());
    }
  }
  IntMat h = hermite_normal_form(stacked);
  if (h.rows() != n) fail("Degenerate", "overlattice basis is not full rank");

  RatMat basis(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) basis(i, j) = make_rat(h(i, j), d);
  }
  RatMat gram_r = basis * gram_q * basis.transpose();
  IntMat gram(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (gram_r(i, j).get_den() != 1) {
        fail("NotIsotropic", "overlattice Gram matrix is not integral");
      }
      gram(i, j) = Int(gram_r(i, j).get_num());
    }
  }
  return IntegerLattice::from_gram(gram);
}

IntegerLattice orthogonal_complement(const SublatticeBasis& sub) {
  const IntegerLattice& ambient = sub.ambient;
  if (sub.basis.cols() != ambient.rank()) {
    fail("DimensionMismatch", "sublattice vectors must have ambient rank many coordinates");
  }
  // x is orthogonal to the sublattice iff (S G) x = 0; the integer kernel is
  // already saturated, so this is the full complement.
  IntMat sg = sub.basis * ambient.gram();
  IntMat kernel = integer_kernel(sg);  // columns
  const Index m = kernel.cols();
  IntMat gram = kernel.transpose() * ambient.gram() * kernel;
  (void)m;
  return IntegerLattice::from_gram(gram);
}

bool is_primitive(const SublatticeBasis& sub) {
  if (sub.basis.cols() != sub.ambient.rank()) {
    fail("DimensionMismatch", "sublattice vectors must have ambient rank many coordinates");
  }
  SnfResult snf = smith_normal_form(sub.basis);
  const Index r = std::min(sub.basis.rows(), sub.basis.cols());
  Index rank = 0;
  for (Index i = 0; i < r; ++i) {
    if (snf.d(i, i) != 0) ++rank;
  }
  if (rank < sub.basis.rows()) return false;  // dependent rows
  for (Index i = 0; i < rank; ++i) {
    if (snf.d(i, i) != 1) return false;
  }
  return true;
}

IntMat saturate(const SublatticeBasis& sub) {
  if (sub.basis.cols() != sub.ambient.rank()) {
    fail("DimensionMismatch", "sublattice vectors must have ambient rank many coordinates");
  }
  // Saturation = kernel of (kernel of basis rows applied on the right),
  // i.e. the double complement of the row span.
  IntMat k1 = integer_kernel(sub.basis);               // columns: x with B x = 0
  if (k1.cols() == 0) {
    // Rank n row span: the saturation is all of Z^n.
    return IntMat::Identity(sub.basis.cols(), sub.basis.cols());
  }
  IntMat k2 = integer_kernel(IntMat(k1.transpose()));  // columns span saturation
  IntMat rows(k2.cols(), k2.rows());
  for (Index c = 0; c < k2.cols(); ++c) {
    for (Index r = 0; r < k2.rows(); ++r) rows(c, r) = k2(r, c);
  }
  return hermite_normal_form(rows);
}

std::optional<GlueData> graph_glue(const IntegerLattice& left, const IntegerLattice& right,
                                   const Int& p) {
  DiscriminantForm dl = discriminant_form_full(left);
  DiscriminantForm dr = discriminant_form_full(right);
  DiscriminantForm pl = p_primary_part(dl, p);
  DiscriminantForm pr = p_primary_part(dr, p);

  auto images = find_anti_isometry(pl.form, pr.form);
  if (!images) return std::nullopt;

  const Index nl = left.rank();
  const Index nr = right.rank();
  const int k = pl.form.num_generators();
  RatMat gens(k, nl + nr);
  gens.setZero();
  for (int i = 0; i < k; ++i) {
    for (Index r = 0; r < nl; ++r) gens(i, r) = pl.lifts(r, i);
    const GroupElement& y = (*images)[static_cast<size_t>(i)];
    for (int j = 0; j < pr.form.num_generators(); ++j) {
      for (Index r = 0; r < nr; ++r) {
        gens(i, nl + r) += Rat(y.coords[static_cast<size_t>(j)]) * pr.lifts(r, j);
      }
    }
  }
  return GlueData{direct_sum(left, right), std::move(gens)};
}

}  // namespace lf
