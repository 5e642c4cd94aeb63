#include "cyclotomic.hpp"

#include <map>
#include <mutex>

namespace lf::detail {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of polynomials over Z; divisor must be monic and must
// divide exactly.
Poly exact_div(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size() && !num.empty()) {
    const size_t shift = num.size() - den.size();
    Int c = num.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  return q;
}

}  // namespace

const Poly& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // (x^n - 1) / prod of cyclotomic polynomials of proper divisors.
  Poly num(static_cast<size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly* phi;
    auto dit = cache.find(d);
    if (dit != cache.end()) {
      phi = &dit->second;
    } else {
      // Recurse without the lock held twice: divisors are strictly smaller,
      // so compute them inline here.
      // (Divisor chain is short; recursion depth is log n.)
      Poly dnum(static_cast<size_t>(d) + 1, Int(0));
      dnum[0] = -1;
      dnum[static_cast<size_t>(d)] = 1;
      for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        dnum = exact_div(dnum, cache.at(e));  // e < d already cached by order
      }
      phi = &cache.emplace(d, dnum).first->second;
    }
    num = exact_div(num, *phi);
  }
  return cache.emplace(n, num).first->second;
}

void add_monomial(CircPoly& p, long exponent, const Int& coeff) {
  long e = exponent % p.n;
  if (e < 0) e += p.n;
  p.c[static_cast<size_t>(e)] += coeff;
}

CircPoly mul(const CircPoly& a, const CircPoly& b) {
  CircPoly r(a.n);
  for (long i = 0; i < a.n; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < b.n; ++j) {
      if (b.c[static_cast<size_t>(j)] == 0) continue;
      r.c[static_cast<size_t>((i + j) % a.n)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    }
  }
  return r;
}

CircPoly sub(const CircPoly& a, const CircPoly& b) {
  CircPoly r = a;
  for (long i = 0; i < a.n; ++i) r.c[static_cast<size_t>(i)] -= b.c[static_cast<size_t>(i)];
  return r;
}

bool vanishes_at_primitive_root(const CircPoly& p) {
  const Poly& phi = cyclotomic_polynomial(p.n);
  Poly rem = p.c;
  // Remainder mod the monic cyclotomic polynomial.
  while (true) {
    size_t deg = rem.size();
    while (deg > 0 && rem[deg - 1] == 0) --deg;
    if (deg < phi.size()) break;
    const size_t shift = deg - phi.size();
    Int c = rem[deg - 1];
    for (size_t i = 0; i < phi.size(); ++i) rem[shift + i] -= c * phi[i];
  }
  for (const Int& v : rem) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace lf::detail
