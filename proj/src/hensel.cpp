#include "degfac/hensel.hpp"

#include "degfac/error.hpp"

namespace degfac {

namespace {

SparsePoly tmul(const SparsePoly& a, const SparsePoly& b, int m) {
  return SparsePoly::mul(a, b, MulCaps{-1, m});
}

int ydeg(const SparsePoly& p) { return p.degree_in(p.arity() - 1); }

// Coefficient of y^k as a polynomial of the same arity with y cleared.
SparsePoly ycoeff(const SparsePoly& p, int k) {
  int yvar = p.arity() - 1;
  SparsePoly r(p.arity());
  for (const auto& [mon, c] : p.terms()) {
    if (mon.exponents[yvar] != k) continue;
    Monomial m2 = mon;
    m2.exponents[yvar] = 0;
    r.add_term(m2, c);
  }
  return r;
}

bool monic_in_y(const SparsePoly& g) {
  int d = ydeg(g);
  if (d < 0) return false;
  SparsePoly lead = ycoeff(g, d);
  return lead == SparsePoly::constant(g.arity(), Rational(1));
}

// Division by g monic in y, everything modulo I^m.
std::pair<SparsePoly, SparsePoly> quotrem_y(const SparsePoly& a, const SparsePoly& g,
                                            int m) {
  int yvar = a.arity() - 1;
  int dg = ydeg(g);
  require(monic_in_y(g), errc::internal, "quotrem_y: divisor not monic in y");
  SparsePoly q(a.arity());
  SparsePoly r = a.truncate_head_degree(m);
  while (!r.is_zero() && ydeg(r) >= dg) {
    int dr = ydeg(r);
    SparsePoly c = ycoeff(r, dr);
    Monomial shift(a.arity());
    shift.exponents[yvar] = dr - dg;
    SparsePoly t = tmul(c, SparsePoly::term(a.arity(), shift, Rational(1)), m);
    q += t;
    r -= tmul(t, g, m);
  }
  return {q, r};
}

void check(bool cond, const char* what) {
  require(cond, errc::internal, std::string("hensel lift postcondition failed: ") + what);
}

}  // namespace

LiftState initial_state(const SparsePoly& f, const UniPoly& g0, const UniPoly& h0) {
  int na = f.arity();
  require(na >= 2, errc::precondition, "initial_state: f must have at least x1 and y");
  require(!g0.is_zero() && !h0.is_zero(), errc::precondition,
          "initial_state: zero initial factor");
  require(g0.is_monic(), errc::precondition, "initial_state: g0 is not monic");
  require(gcd(g0, h0).degree() == 0, errc::precondition,
          "initial_state: g0 and h0 are not coprime");
  // f(0, ..., 0, y) must equal g0 * h0 exactly.
  std::vector<int> xs(na - 1);
  std::vector<Rational> zeros(na - 1, Rational(0));
  for (int i = 0; i < na - 1; ++i) xs[i] = i;
  SparsePoly f0 = f.substitute(xs, zeros);
  SparsePoly prod = (g0 * h0).to_sparse(na, na - 1);
  require(f0 == prod, errc::precondition,
          "initial_state: f(0, y) differs from g0 * h0");
  auto bez = xgcd(g0, h0);  // bez.u * g0 + bez.v * h0 = 1
  LiftState s;
  s.level = 0;
  s.g = TruncatedPoly::of(g0.to_sparse(na, na - 1), 1);
  s.h = TruncatedPoly::of(h0.to_sparse(na, na - 1), 1);
  s.u = TruncatedPoly::of(bez.u.to_sparse(na, na - 1), 1);
  s.v = TruncatedPoly::of(bez.v.to_sparse(na, na - 1), 1);
  return s;
}

LiftState lift_step(const LiftState& s, const SparsePoly& f) {
  int mk = s.g.trunc_order;        // 2^k
  int m = 2 * mk;                  // 2^{k+1}
  int na = f.arity();
  const SparsePoly& g = s.g.value;
  const SparsePoly& h = s.h.value;
  const SparsePoly& u = s.u.value;
  const SparsePoly& v = s.v.value;
  SparsePoly one = SparsePoly::constant(na, Rational(1));

  SparsePoly e = (f - tmul(g, h, m)).truncate_head_degree(m);
  auto [q, r] = quotrem_y(tmul(v, e, m), g, m);
  SparsePoly g1 = (g + r).truncate_head_degree(m);
  SparsePoly h1 = (h + tmul(u, e, m) + tmul(q, h, m)).truncate_head_degree(m);
  SparsePoly b = (tmul(u, g1, m) + tmul(v, h1, m) - one).truncate_head_degree(m);
  auto [c, w] = quotrem_y(tmul(v, b, m), g1, m);
  SparsePoly v1 = (v - w).truncate_head_degree(m);
  SparsePoly u1 = (u - tmul(u, b, m) - tmul(c, h1, m)).truncate_head_degree(m);

  check((f - tmul(g1, h1, m)).truncate_head_degree(m).is_zero(), "f = g'h' mod I^2m");
  check((g1 - g).truncate_head_degree(mk).is_zero(), "g' = g mod I^m");
  check((h1 - h).truncate_head_degree(mk).is_zero(), "h' = h mod I^m");
  check((tmul(u1, g1, m) + tmul(v1, h1, m) - one).truncate_head_degree(m).is_zero(),
        "u'g' + v'h' = 1 mod I^2m");
  check(monic_in_y(g1) && ydeg(g1) == ydeg(g), "g' monic with unchanged y-degree");

  LiftState t;
  t.level = s.level + 1;
  t.g = {g1, m};
  t.h = {h1, m};
  t.u = {u1, m};
  t.v = {v1, m};
  return t;
}

std::pair<SparsePoly, TruncatedPoly> iterate_lift(const SparsePoly& f,
                                                  const UniPoly& g0,
                                                  const UniPoly& h0, int d) {
  require(d >= 0, errc::precondition, "iterate_lift: negative degree bound");
  LiftState s = initial_state(f, g0, h0);
  int ell = 0;
  while ((1 << ell) <= d) ++ell;
  for (int k = 0; k < ell; ++k) s = lift_step(s, f);
  return {s.g.value.hom_component_leq(d), s.h};
}

}  // namespace degfac
