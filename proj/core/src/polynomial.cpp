#include "cks/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cks {

namespace {
int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
}  // namespace

IntVec poly_trim(IntVec p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

std::size_t poly_degree(const IntVec& p) {
  std::size_t d = p.size();
  while (d > 1 && p[d - 1] == 0) --d;
  return d - 1;
}

IntVec poly_derivative(const IntVec& p) {
  if (p.size() <= 1) return {Int(0)};
  IntVec d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Int(i) * p[i];
  return poly_trim(std::move(d));
}

Int poly_eval(const IntVec& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Rat poly_eval(const IntVec& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

IntVec poly_mul(const IntVec& a, const IntVec& b) {
  IntVec out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntVec poly_primitive_part(IntVec p) {
  p = poly_trim(std::move(p));
  Int g = 0;
  for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (Int& c : p) c /= g;
  return p;
}

namespace {

// Pseudo-remainder scaled to keep integer coefficients; the sign of the
// scaling factor is forced positive so Sturm sign sequences stay valid.
IntVec sturm_rem(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  const std::size_t db = poly_degree(b);
  Int lb = b[db];
  while (poly_degree(r) >= db && !(r.size() == 1 && r[0] == 0)) {
    std::size_t dr = poly_degree(r);
    Int lr = r[dr];
    // r := lb * r - lr * x^(dr-db) * b
    IntVec nr(std::max(r.size(), dr + 1), Int(0));
    for (std::size_t i = 0; i <= dr; ++i) nr[i] = lb * r[i];
    for (std::size_t i = 0; i <= db; ++i) nr[i + dr - db] -= lr * b[i];
    nr = poly_trim(std::move(nr));
    if (lb < 0) {
      // two steps of multiplying by a negative would flip signs; normalize
      for (Int& c : nr) c = -c;
    }
    r = poly_primitive_part(std::move(nr));
    if (r.size() == 1 && r[0] == 0) break;
  }
  return r;
}

std::vector<IntVec> sturm_chain(const IntVec& p) {
  std::vector<IntVec> chain;
  chain.push_back(poly_primitive_part(p));
  chain.push_back(poly_primitive_part(poly_derivative(chain[0])));
  while (poly_degree(chain.back()) > 0) {
    IntVec r = sturm_rem(chain[chain.size() - 2], chain.back());
    if (r.size() == 1 && r[0] == 0) break;
    for (Int& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (poly_degree(chain.back()) > 0)
    throw std::invalid_argument("sturm: polynomial is not squarefree");
  return chain;
}

int sign_of(const Rat& x) { return sgn(x); }

int sign_at(const IntVec& p, const std::optional<Rat>& x, bool plus_infinity) {
  if (x) return sign_of(poly_eval(p, *x));
  std::size_t d = poly_degree(p);
  int lead = sgn(p[d]);
  if (plus_infinity) return lead;
  return (d % 2 == 0) ? lead : -lead;
}

int sign_variations(const std::vector<IntVec>& chain,
                    const std::optional<Rat>& x, bool plus_infinity) {
  int variations = 0, prev = 0;
  for (const IntVec& p : chain) {
    int s = sign_at(p, x, plus_infinity);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int sturm_count(const IntVec& p, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi) {
  auto chain = sturm_chain(p);
  // Sturm counts roots in (lo, hi]; nudge an endpoint that is itself a root
  // is not needed here because callers use open/rational bounds away from
  // roots or accept the (lo, hi] convention.
  return sign_variations(chain, lo, false) - sign_variations(chain, hi, true);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntVec& p) {
  auto chain = sturm_chain(p);
  auto count = [&chain](const Rat& a, const Rat& b) {
    return sign_variations(chain, a, false) - sign_variations(chain, b, true);
  };
  // Cauchy bound on root magnitude.
  std::size_t d = poly_degree(p);
  Int maxc = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (cmpabs(p[i], maxc) > 0) maxc = abs(p[i]);
  Int lead = abs(p[d]);
  Rat bound = Rat(maxc) / Rat(lead) + 1;
  std::vector<std::pair<Rat, Rat>> out;
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rat mid = (a + b) / 2;
    work.emplace_back(mid, b);
    work.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::pair<Rat, Rat> refine_root(const IntVec& p, std::pair<Rat, Rat> iv,
                                const Rat& width) {
  auto chain = sturm_chain(p);
  auto count = [&chain](const Rat& a, const Rat& b) {
    return sign_variations(chain, a, false) - sign_variations(chain, b, true);
  };
  while (iv.second - iv.first > width) {
    Rat mid = (iv.first + iv.second) / 2;
    if (count(iv.first, mid) == 1)
      iv.second = mid;
    else
      iv.first = mid;
  }
  return iv;
}

namespace {

std::vector<Int> divisors_of(const Int& n) {
  Int a = abs(n);
  std::vector<Int> divs;
  for (Int i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      divs.push_back(i);
      if (i * i != a) divs.push_back(a / i);
    }
  }
  return divs;
}

bool has_rational_root(const IntVec& p) {
  // monic: rational roots are integer divisors of the constant term
  if (p[0] == 0) return true;
  for (const Int& d : divisors_of(p[0])) {
    if (poly_eval(p, d) == 0 || poly_eval(p, Int(-d)) == 0) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> poly_irreducible_small(const IntVec& p) {
  IntVec q = poly_trim(p);
  std::size_t d = poly_degree(q);
  if (d == 0) return false;
  if (q[d] != 1) return std::nullopt;  // only monic handled
  if (d == 1) return true;
  if (d <= 3) return !has_rational_root(q);
  if (d == 4) {
    if (has_rational_root(q)) return false;
    // (x^2+ax+b)(x^2+cx+d) over Z; enumerate divisor pairs b*d = q0.
    const Int q0 = q[0], q1 = q[1], q2 = q[2], q3 = q[3];
    if (q0 == 0) return false;
    for (const Int& b0 : divisors_of(q0)) {
      for (int bsign : {1, -1}) {
        Int b = bsign * b0;
        if (q0 % b != 0) continue;
        Int dd = q0 / b;
        // a + c = q3; ac = q2 - b - d; ad + bc = q1
        // => a, c are roots of t^2 - q3 t + (q2 - b - d) = 0
        Int disc = q3 * q3 - 4 * (q2 - b - dd);
        Int s;
        if (disc < 0 || !is_perfect_square(disc, &s)) continue;
        for (int ssign : {1, -1}) {
          Int a = q3 + ssign * s;
          if (a % 2 != 0) continue;
          a /= 2;
          Int c = q3 - a;
          if (a * dd + b * c == q1) return false;
        }
      }
    }
    return true;
  }
  return std::nullopt;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace cks
