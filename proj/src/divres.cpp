#include "degfac/divres.hpp"

#include <functional>
#include <map>

#include "degfac/error.hpp"
#include "degfac/hitting.hpp"

namespace degfac {

std::optional<std::vector<Rational>> ExactPit::find_nonzero_point(
    const SparsePoly& p, int degree_bound) const {
  if (p.is_zero()) return std::nullopt;
  require(degree_bound >= p.degree(), errc::precondition,
          "find_nonzero_point: degree bound too small");
  int n = p.arity();
  std::vector<Rational> point(n, Rational(0));
  SparsePoly cur = p;
  // Fix variables left to right, keeping the partial evaluation nonzero;
  // deg+1 values always suffice for a univariate restriction.
  for (int i = 0; i < n; ++i) {
    for (long v = 0; v <= degree_bound; ++v) {
      SparsePoly next = cur.substitute({i}, {Rational(v)});
      if (!next.is_zero()) {
        point[i] = Rational(v);
        cur = next;
        break;
      }
    }
  }
  require(!cur.is_zero(), errc::internal, "find_nonzero_point lost the polynomial");
  return point;
}

PseudoQuotient pseudo_quotient(const SparsePoly& f, const SparsePoly& g) {
  require(!f.is_zero() && !g.is_zero(), errc::zero_input, "pseudo_quotient: zero input");
  require(f.arity() == g.arity(), errc::arity_mismatch, "pseudo_quotient: arity mismatch");
  Rational beta = g.constant_term();
  require(!beta.is_zero(), errc::precondition,
          "pseudo_quotient: g(0) = 0; translate the inputs to a point where g "
          "does not vanish");
  int df = f.degree(), dg = g.degree();
  require(df >= dg, errc::precondition,
          "pseudo_quotient: deg(f) < deg(g), divisibility is trivially false");
  int k = df - dg;
  int n = f.arity();
  MulCaps caps{k, -1};
  SparsePoly one = SparsePoly::constant(n, Rational(1));
  // gt = 1 - g/beta has zero constant term, so the geometric series
  // truncates after k products.
  SparsePoly gt = one - g.scale(beta.inv());
  SparsePoly series = one;  // 1 + gt + ... computed by Horner
  for (int i = 0; i < k; ++i) series = one + SparsePoly::mul(gt, series, caps);
  PseudoQuotient pq;
  pq.q = SparsePoly::mul(f.scale(beta.inv()), series, caps);
  pq.beta = beta;
  pq.df = df;
  pq.dg = dg;
  return pq;
}

bool divides(const SparsePoly& f, const SparsePoly& g, const PitBackend& pit) {
  require(!g.is_zero(), errc::zero_input, "divides: zero divisor");
  require(f.arity() == g.arity(), errc::arity_mismatch, "divides: arity mismatch");
  if (f.is_zero() || g.is_constant()) return true;
  if (f.degree() < g.degree()) return false;
  SparsePoly fs = f, gs = g;
  if (g.constant_term().is_zero()) {
    auto pts = hitting_set(g.degree(), g.arity());
    auto b = first_nonvanishing(g, pts);
    require(b.has_value(), errc::internal, "divides: hitting set missed g");
    fs = f.translate(*b);
    gs = g.translate(*b);
  }
  SparsePoly r = fs - gs * pseudo_quotient(fs, gs).q;
  return pit.is_zero(r);
}

namespace {

// Determinant by minor expansion over the first rows, memoized on the set of
// unused columns (the row index is implied by the popcount).
SparsePoly det_minor(const std::vector<std::vector<SparsePoly>>& m, int arity) {
  int n = static_cast<int>(m.size());
  std::map<unsigned, SparsePoly> memo;
  std::function<SparsePoly(unsigned)> rec = [&](unsigned used) -> SparsePoly {
    int row = __builtin_popcount(used);
    if (row == n) return SparsePoly::constant(arity, Rational(1));
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    SparsePoly acc(arity);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      if (!m[row][col].is_zero()) {
        SparsePoly sub = rec(used | (1u << col));
        SparsePoly term = m[row][col] * sub;
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0);
}

// Fraction-free Bareiss elimination over the polynomial ring; divisions are
// exact by the Bareiss identity.
SparsePoly det_bareiss(std::vector<std::vector<SparsePoly>> m, int arity) {
  int n = static_cast<int>(m.size());
  SparsePoly prev = SparsePoly::constant(arity, Rational(1));
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!m[r][k].is_zero()) { piv = r; break; }
    if (piv < 0) return SparsePoly::zero(arity);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        SparsePoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = lex_divide(num, prev);
        require(q.has_value(), errc::internal, "bareiss: inexact division");
        m[i][j] = *q;
      }
      m[i][k] = SparsePoly::zero(arity);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

SparsePoly sylvester_resultant(const SparsePoly& g, const SparsePoly& h, int yvar) {
  require(!g.is_zero() && !h.is_zero(), errc::zero_input, "resultant: zero input");
  require(g.arity() == h.arity(), errc::arity_mismatch, "resultant: arity mismatch");
  require(yvar >= 0 && yvar < g.arity(), errc::precondition, "resultant: bad variable");
  int arity = g.arity();
  int d = g.degree_in(yvar);
  int D = h.degree_in(yvar);
  require(d > 0 || D > 0, errc::precondition, "resultant: both inputs constant in y");
  std::vector<SparsePoly> gc = g.coefficients_in(yvar);
  std::vector<SparsePoly> hc = h.coefficients_in(yvar);
  if (d == 0) return gc[0].pow(D);
  if (D == 0) return hc[0].pow(d);
  int n = d + D;
  std::vector<std::vector<SparsePoly>> m(
      n, std::vector<SparsePoly>(n, SparsePoly::zero(arity)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= D; ++j) m[i][i + j] = hc[j];
  for (int i = 0; i < D; ++i)
    for (int j = 0; j <= d; ++j) m[d + i][i + j] = gc[j];
  return n <= 8 ? det_minor(m, arity) : det_bareiss(std::move(m), arity);
}

Rational resultant_at_point(const SparsePoly& g, const SparsePoly& h, int yvar,
                            const std::vector<Rational>& a) {
  require(!g.is_zero() && !h.is_zero(), errc::zero_input, "resultant: zero input");
  int arity = g.arity();
  require(static_cast<int>(a.size()) == arity - 1, errc::arity_mismatch,
          "resultant_at_point: point must cover all variables but y");
  std::vector<int> vars;
  std::vector<Rational> vals;
  for (int i = 0, j = 0; i < arity; ++i) {
    if (i == yvar) continue;
    vars.push_back(i);
    vals.push_back(a[j++]);
  }
  auto restrict_poly = [&](const SparsePoly& p) {
    SparsePoly sub = p.substitute(vars, vals);
    // move y into the last slot and drop the rest
    std::vector<Rational> coeffs;
    for (const auto& [mon, c] : sub.terms()) {
      int e = mon.exponents[yvar];
      if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, Rational(0));
      coeffs[e] += c;
    }
    return UniPoly(std::move(coeffs));
  };
  UniPoly gu = restrict_poly(g);
  UniPoly hu = restrict_poly(h);
  require(gu.degree() == g.degree_in(yvar) && hu.degree() == h.degree_in(yvar),
          errc::precondition,
          "resultant_at_point: a leading y-coefficient vanishes at the point");
  return resultant_univariate(gu, hu);
}

}  // namespace degfac
