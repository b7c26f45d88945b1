#include "degfac/unipoly.hpp"

#include "degfac/error.hpp"

namespace degfac {

UniPoly UniPoly::monomial(int k, const Rational& c) {
  require(k >= 0, errc::precondition, "monomial: negative degree");
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::lc() const {
  require(!is_zero(), errc::zero_input, "lc of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scale(const Rational& k) const {
  if (k.is_zero()) return UniPoly();
  UniPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::pow(int e) const {
  require(e >= 0, errc::precondition, "pow: negative exponent");
  UniPoly acc = UniPoly::constant(Rational(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  require(!d.is_zero(), errc::zero_input, "division by zero polynomial");
  UniPoly r = *this;
  int dd = d.degree();
  Rational dl = d.lc().inv();
  std::vector<Rational> q(r.degree() >= dd ? r.degree() - dd + 1 : 0, Rational(0));
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    Rational c = r.lc() * dl;
    q[k] = c;
    std::vector<Rational> nr = r.c_;
    for (int i = 0; i <= dd; ++i) nr[k + i] -= c * d.c_[i];
    r = UniPoly(std::move(nr));
  }
  return {UniPoly(std::move(q)), r};
}

SparsePoly UniPoly::to_sparse(int arity, int var) const {
  require(var >= 0 && var < arity, errc::precondition, "to_sparse: bad variable");
  SparsePoly p(arity);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Monomial m(arity);
    m.exponents[var] = static_cast<int>(i);
    p.add_term(m, c_[i]);
  }
  return p;
}

UniPoly UniPoly::from_sparse(const SparsePoly& p, int var) {
  std::vector<Rational> v;
  for (const auto& [m, c] : p.terms()) {
    require(m.total_degree() == m.exponents[var], errc::precondition,
            "from_sparse: polynomial is not univariate in the given variable");
    int e = m.exponents[var];
    if (static_cast<int>(v.size()) <= e) v.resize(e + 1, Rational(0));
    v[e] = c;
  }
  return UniPoly(std::move(v));
}

bool UniPoly::canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational& x = a.coeff(i);
    const Rational& y = b.coeff(i);
    if (!(x == y)) return x < y;
  }
  return false;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

XgcdResult xgcd(const UniPoly& a, const UniPoly& b) {
  require(!(a.is_zero() && b.is_zero()), errc::zero_input, "xgcd(0, 0)");
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(Rational(1)), u1;
  UniPoly v0, v1 = UniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  Rational k = r0.lc().inv();
  return {u0.scale(k), v0.scale(k), r0.scale(k)};
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f) {
  require(!f.is_zero(), errc::zero_input, "squarefree_decompose(0)");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() == 0) return out;
  // Yun on the monic part of f.
  UniPoly fm = f.monic();
  UniPoly fp = fm.derivative();
  UniPoly g = gcd(fm, fp);
  UniPoly c = fm.divmod(g).first;
  UniPoly d = fp.divmod(g).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    UniPoly p = gcd(c, d);
    if (p.degree() > 0) out.emplace_back(p, i);
    c = c.divmod(p).first;
    d = d.divmod(p).first - c.derivative();
  }
  return out;
}

Rational resultant_univariate(const UniPoly& g, const UniPoly& h) {
  require(!g.is_zero() && !h.is_zero(), errc::zero_input, "resultant of zero polynomial");
  int d = g.degree();
  int D = h.degree();
  require(d > 0 || D > 0, errc::precondition, "resultant of two constants");
  if (d == 0) return g.lc().pow(static_cast<unsigned long>(D));
  if (D == 0) return h.lc().pow(static_cast<unsigned long>(d));
  int n = d + D;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= D; ++j) m[i][i + j] = h.coeff(j);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j <= d; ++j) m[d + i][i + j] = g.coeff(j);
  // Gaussian elimination with exact rational arithmetic.
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = m[col][col].inv();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational k = m[r][col] * inv;
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= k * m[col][c2];
    }
  }
  return det;
}

}  // namespace degfac
