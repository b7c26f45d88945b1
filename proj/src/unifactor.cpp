#include "degfac/unifactor.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <sstream>

#include "degfac/error.hpp"

namespace degfac {

namespace {

using Z = mpz_class;

// Dense polynomial with coefficients reduced into [0, m); lowest degree first.
using MPoly = std::vector<Z>;

Z zmod(const Z& x, const Z& m) {
  Z r = x % m;
  if (r < 0) r += m;
  return r;
}

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly madd(const MPoly& a, const MPoly& b, const Z& m) {
  MPoly r(std::max(a.size(), b.size()), Z(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = zmod(r[i] + b[i], m);
  mtrim(r);
  return r;
}

MPoly msub(const MPoly& a, const MPoly& b, const Z& m) {
  MPoly r(std::max(a.size(), b.size()), Z(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = zmod(r[i] - b[i], m);
  mtrim(r);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Z& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, Z(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x = zmod(x, m);
  mtrim(r);
  return r;
}

MPoly mscale(const MPoly& a, const Z& k, const Z& m) {
  MPoly r = a;
  for (auto& x : r) x = zmod(x * k, m);
  mtrim(r);
  return r;
}

Z minv(const Z& x, const Z& m) {
  Z r;
  int ok = mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  require(ok != 0, errc::internal, "non-invertible element " + x.get_str() + " mod " + m.get_str());
  return r;
}

// Division by a divisor whose leading coefficient is invertible mod m.
std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& d, const Z& m) {
  require(!d.empty(), errc::internal, "modular division by zero");
  Z dinv = minv(d.back(), m);
  MPoly r = a;
  mtrim(r);
  int dd = mdeg(d);
  MPoly q(mdeg(r) >= dd ? mdeg(r) - dd + 1 : 0, Z(0));
  while (mdeg(r) >= dd) {
    int k = mdeg(r) - dd;
    Z c = zmod(r.back() * dinv, m);
    q[k] = c;
    for (int i = 0; i <= dd; ++i) r[k + i] = zmod(r[k + i] - c * d[i], m);
    mtrim(r);
  }
  return {q, r};
}

MPoly mmonic(const MPoly& a, const Z& m) { return mscale(a, minv(a.back(), m), m); }

MPoly mgcd(MPoly a, MPoly b, const Z& p) {
  while (!b.empty()) {
    MPoly r = mdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = mmonic(a, p);
  return a;
}

// u*a + v*b = 1 mod p for coprime a, b.
std::pair<MPoly, MPoly> mxgcd_bezout(const MPoly& a, const MPoly& b, const Z& p) {
  MPoly r0 = a, r1 = b;
  MPoly u0 = {Z(1)}, u1, v0, v1 = {Z(1)};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    MPoly u2 = msub(u0, mmul(q, u1, p), p);
    MPoly v2 = msub(v0, mmul(q, v1, p), p);
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  require(mdeg(r0) == 0, errc::internal, "bezout: inputs not coprime");
  Z k = minv(r0[0], p);
  return {mscale(u0, k, p), mscale(v0, k, p)};
}

MPoly mderiv(const MPoly& a, const Z& m) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = zmod(a[i] * Z(static_cast<long>(i)), m);
  mtrim(r);
  return r;
}

// ---- Berlekamp over F_p (deterministic; p is small) ----

std::vector<MPoly> berlekamp(const MPoly& f, const Z& p) {
  int n = mdeg(f);
  require(n >= 1 && f.back() == 1, errc::internal, "berlekamp expects monic input");
  if (n == 1) return {f};
  // Rows of Q: coefficients of y^(i*p) mod f for i = 0..n-1.
  MPoly yp = {Z(1)};
  {
    // y^p mod f by square and multiply on the exponent p.
    MPoly base = mdeg(f) > 1 ? MPoly{Z(0), Z(1)} : mdivmod({Z(0), Z(1)}, f, p).second;
    Z e = p;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) yp = mdivmod(mmul(yp, base, p), f, p).second;
      base = mdivmod(mmul(base, base, p), f, p).second;
      e >>= 1;
    }
  }
  std::vector<std::vector<Z>> Q(n, std::vector<Z>(n, Z(0)));
  MPoly row = {Z(1)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= mdeg(row); ++j) Q[i][j] = row[j];
    row = mdivmod(mmul(row, yp, p), f, p).second;
  }
  // Left null space of (Q - I): solve v (Q - I) = 0, i.e. null space of (Q - I)^T.
  std::vector<std::vector<Z>> M(n, std::vector<Z>(n, Z(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = zmod(Q[j][i] - (i == j ? 1 : 0), p);
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (M[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    Z inv = minv(M[rank][col], p);
    for (int c = 0; c < n; ++c) M[rank][c] = zmod(M[rank][c] * inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Z k = M[r][col];
      for (int c = 0; c < n; ++c) M[r][c] = zmod(M[r][c] - k * M[rank][c], p);
    }
    pivot_col[rank++] = col;
  }
  std::vector<MPoly> basis;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    MPoly v(n, Z(0));
    v[free_col] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = zmod(-M[r][free_col], p);
    mtrim(v);
    basis.push_back(std::move(v));
  }
  size_t k = basis.size();  // number of irreducible factors
  std::vector<MPoly> factors = {f};
  if (k == 1) return factors;
  for (const MPoly& v : basis) {
    if (factors.size() == k) break;
    if (mdeg(v) < 1) continue;  // the all-ones direction gives no split
    for (Z c = 0; c < p && factors.size() < k; ++c) {
      MPoly shifted = msub(v, {c}, p);
      std::vector<MPoly> next;
      for (const MPoly& w : factors) {
        if (mdeg(w) <= 1) { next.push_back(w); continue; }
        MPoly g = mgcd(w, shifted, p);
        if (mdeg(g) > 0 && mdeg(g) < mdeg(w)) {
          next.push_back(g);
          next.push_back(mmonic(mdivmod(w, g, p).first, p));
        } else {
          next.push_back(w);
        }
      }
      factors = std::move(next);
    }
  }
  require(factors.size() == k, errc::internal, "berlekamp splitting incomplete");
  return factors;
}

// ---- Quadratic Hensel lifting ----

struct LiftPair { MPoly g, h, s, t; };

// f = g*h, s*h + t*g = 1 mod m, g monic; returns the same relations mod m^2.
LiftPair hensel_step(const MPoly& f, const LiftPair& in, const Z& m) {
  Z m2 = m * m;
  MPoly e = msub(f, mmul(in.g, in.h, m2), m2);
  auto [q, r] = mdivmod(mmul(in.s, e, m2), in.g, m2);
  MPoly g1 = madd(in.g, r, m2);
  MPoly h1 = madd(in.h, madd(mmul(in.t, e, m2), mmul(q, in.h, m2), m2), m2);
  MPoly b = msub(madd(mmul(in.s, h1, m2), mmul(in.t, g1, m2), m2), {Z(1)}, m2);
  auto [cq, cr] = mdivmod(mmul(in.s, b, m2), g1, m2);
  MPoly s1 = msub(in.s, cr, m2);
  MPoly t1 = msub(msub(in.t, mmul(in.t, b, m2), m2), mmul(cq, h1, m2), m2);
  // Keep deg s < deg g; the quotient is absorbed into t through the
  // Bezout identity s*h + t*g = 1.
  auto [ns, rs] = mdivmod(s1, g1, m2);
  t1 = madd(t1, mmul(ns, h1, m2), m2);
  s1 = rs;
  return {g1, h1, s1, t1};
}

// Lifts the factorization f = lc(f) * prod(gs) (mod p, gs monic and pairwise
// coprime mod p) to monic factors mod M with lc(f) * prod ≡ f (mod M).
// Returns the final modulus actually reached (a power p^(2^j) >= M).
std::vector<MPoly> lift_factors(const MPoly& f_int, const std::vector<MPoly>& gs,
                                const Z& p, const Z& M, Z& final_mod) {
  // Determine the common final modulus first.
  Z fm = p;
  while (fm < M) fm = fm * fm;
  final_mod = fm;
  struct Rec {
    static std::vector<MPoly> go(const MPoly& f, const std::vector<MPoly>& gs,
                                 size_t lo, size_t hi, const Z& p, const Z& fm) {
      MPoly fr = f;
      for (auto& x : fr) x = zmod(x, fm);
      mtrim(fr);
      if (hi - lo == 1) return {mmonic(fr, fm)};
      size_t mid = lo + (hi - lo) / 2;
      MPoly fp = f;
      for (auto& x : fp) x = zmod(x, p);
      mtrim(fp);
      MPoly u = {Z(1)};
      for (size_t i = lo; i < mid; ++i) u = mmul(u, gs[i], p);
      MPoly v = mdivmod(fp, u, p).first;
      // cu*u + cv*v = 1; the step wants s paired with h = v and t with g = u.
      auto [cu, cv] = mxgcd_bezout(u, v, p);
      LiftPair lp{u, v, cv, cu};
      Z m = p;
      while (m < fm) {
        lp = hensel_step(fr, lp, m);
        m = m * m;
      }
      std::vector<MPoly> left = go(lp.g, gs, lo, mid, p, fm);
      std::vector<MPoly> right = go(lp.h, gs, mid, hi, p, fm);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  };
  return Rec::go(f_int, gs, 0, gs.size(), p, fm);
}

// ---- Zassenhaus on a primitive square-free integer polynomial ----

Z symmetric_rep(const Z& x, const Z& m) {
  Z r = zmod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

UniPoly int_to_uni(const MPoly& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& x : a) v.emplace_back(Rational(x));
  return UniPoly(std::move(v));
}

MPoly uni_to_int(const UniPoly& f) {
  MPoly r;
  for (const auto& c : f.coeffs()) {
    require(c.is_integer(), errc::internal, "expected integer coefficients");
    r.push_back(c.num());
  }
  mtrim(r);
  return r;
}

// Content-free part with positive leading coefficient.
MPoly primitive_part(MPoly a) {
  mtrim(a);
  if (a.empty()) return a;
  Z g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
  return a;
}

// Irreducible integer factors of a primitive square-free q, deg >= 1.
std::vector<std::pair<MPoly, std::string>> zassenhaus(const MPoly& q) {
  int n = mdeg(q);
  if (n == 1) return {{q, "degree 1"}};
  // Smallest odd-or-even prime keeping q square-free with unit leading coeff.
  Z p = 2;
  for (;;) {
    if (q.back() % p != 0) {
      MPoly qp = q;
      for (auto& x : qp) x = zmod(x, p);
      mtrim(qp);
      if (mdeg(qp) == n) {
        MPoly g = mgcd(qp, mderiv(qp, p), p);
        if (mdeg(g) == 0) break;
      }
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  MPoly qp = q;
  for (auto& x : qp) x = zmod(x, p);
  std::vector<MPoly> modular = berlekamp(mmonic(qp, p), p);
  if (modular.size() == 1)
    return {{q, "irreducible modulo " + p.get_str()}};
  // Sort for a deterministic subset order.
  std::sort(modular.begin(), modular.end());
  // Coefficient bound for lc(q) * (any monic factor): Mignotte.
  Z norm2 = 0;
  for (const auto& x : q) norm2 += x * x;
  Z root = sqrt(norm2) + 1;
  Z bound = abs(q.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);  // 2 * 2^n * ...
  Z M;
  std::vector<MPoly> lifted = lift_factors(q, modular, p, bound + 1, M);

  std::vector<std::pair<MPoly, std::string>> out;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  UniPoly rem = int_to_uni(q);
  int s = 1;
  while (2 * s <= static_cast<int>(alive.size())) {
    bool found = false;
    // Lexicographic subsets of `alive` of size s.
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      MPoly cand = {uni_to_int(rem).back()};
      for (int i = 0; i < s; ++i) cand = mmul(cand, lifted[alive[idx[i]]], M);
      for (auto& x : cand) x = symmetric_rep(x, M);
      mtrim(cand);
      MPoly g = primitive_part(cand);
      auto [quo, r] = rem.divmod(int_to_uni(g));
      if (r.is_zero()) {
        std::ostringstream cert;
        cert << "recombination of " << s << " modular factor(s), smaller subsets exhausted";
        out.push_back({g, cert.str()});
        rem = quo;
        std::vector<int> next;
        for (size_t i = 0, k = 0; i < alive.size(); ++i) {
          if (k < idx.size() && static_cast<int>(i) == idx[k]) { ++k; continue; }
          next.push_back(alive[i]);
        }
        alive = std::move(next);
        found = true;
        break;
      }
      // advance combination
      int i = s - 1;
      while (i >= 0 && idx[i] == static_cast<int>(alive.size()) - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rem.degree() > 0)
    out.push_back({uni_to_int(rem), "exhaustive recombination"});
  return out;
}

}  // namespace

UnivariateFactorization factor_univariate(const UniPoly& f) {
  require(!f.is_zero(), errc::zero_input, "factor_univariate(0)");
  UnivariateFactorization res;
  res.sigma = f.lc();
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    // Clear denominators and strip content to get a primitive integer poly.
    Z L = 1;
    for (const auto& c : part.coeffs())
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Rational> scaled;
    for (const auto& c : part.coeffs()) scaled.push_back(c * Rational(L));
    MPoly qz = primitive_part(uni_to_int(UniPoly(std::move(scaled))));
    for (auto& [g, cert] : zassenhaus(qz)) {
      UniFactor uf;
      uf.poly = int_to_uni(g).monic();
      uf.multiplicity = mult;
      uf.certificate = cert;
      res.factors.push_back(std::move(uf));
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const UniFactor& a, const UniFactor& b) {
              return UniPoly::canonical_less(a.poly, b.poly);
            });
  return res;
}

bool is_irreducible_univariate(const UniPoly& f) {
  require(f.degree() >= 1, errc::precondition,
          "irreducibility test requires degree >= 1");
  auto fac = factor_univariate(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 &&
         fac.factors[0].poly.degree() == f.degree();
}

}  // namespace degfac
