#include "degfac/sparse_poly.hpp"

#include <algorithm>

namespace degfac {

namespace {

int head_degree(const Monomial& m) {
  int d = 0;
  for (int i = 0; i + 1 < m.arity(); ++i) d += m.exponents[i];
  return d;
}

bool within_caps(const Monomial& m, const MulCaps& caps) {
  if (caps.total >= 0 && m.total_degree() > caps.total) return false;
  if (caps.head >= 0 && head_degree(m) >= caps.head) return false;
  return true;
}

}  // namespace

SparsePoly SparsePoly::constant(int arity, const Rational& c) {
  SparsePoly p(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

SparsePoly SparsePoly::variable(int arity, int index) {
  require(index >= 0 && index < arity, errc::precondition, "variable index out of range");
  Monomial m(arity);
  m.exponents[index] = 1;
  return term(arity, m, Rational(1));
}

SparsePoly SparsePoly::term(int arity, const Monomial& m, const Rational& c) {
  require(m.arity() == arity, errc::arity_mismatch, "monomial arity mismatch");
  SparsePoly p(arity);
  p.add_term(m, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int SparsePoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponents[var]);
  return d;
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& SparsePoly::leading() const {
  require(!terms_.empty(), errc::zero_input, "leading term of zero polynomial");
  return *terms_.rbegin();
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  require(m.arity() == arity_, errc::arity_mismatch, "monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require(arity_ == o.arity_, errc::arity_mismatch, "add: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require(arity_ == o.arity_, errc::arity_mismatch, "sub: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::mul(const SparsePoly& a, const SparsePoly& b,
                           const MulCaps& caps) {
  require(a.arity_ == b.arity_, errc::arity_mismatch, "mul: arity mismatch");
  SparsePoly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      if (!within_caps(m, caps)) continue;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::scale(const Rational& c) const {
  SparsePoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

SparsePoly SparsePoly::pow(int e, const MulCaps& caps) const {
  require(e >= 0, errc::precondition, "negative exponent");
  SparsePoly acc = constant(arity_, Rational(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base, caps);
    e >>= 1;
    if (e > 0) base = mul(base, base, caps);
  }
  return acc;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  require(static_cast<int>(point.size()) == arity_, errc::arity_mismatch,
          "evaluate: wrong point arity");
  // Power tables up to the maximum exponent per variable.
  std::vector<std::vector<Rational>> pows(arity_);
  for (int i = 0; i < arity_; ++i) {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.exponents[i]);
    pows[i].reserve(mx + 1);
    pows[i].push_back(Rational(1));
    for (int e = 1; e <= mx; ++e) pows[i].push_back(pows[i].back() * point[i]);
  }
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < arity_; ++i) {
      int e = m.exponents[i];
      if (e > 0) t *= pows[i][e];
    }
    acc += t;
  }
  return acc;
}

SparsePoly SparsePoly::substitute(const std::vector<int>& vars,
                                  const std::vector<Rational>& values) const {
  require(vars.size() == values.size(), errc::arity_mismatch,
          "substitute: vars/values size mismatch");
  std::vector<int> which(arity_, -1);
  for (size_t k = 0; k < vars.size(); ++k) {
    require(vars[k] >= 0 && vars[k] < arity_, errc::precondition, "bad variable index");
    which[vars[k]] = static_cast<int>(k);
  }
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest(arity_);
    for (int i = 0; i < arity_; ++i) {
      if (which[i] >= 0) {
        coef *= values[which[i]].pow(m.exponents[i]);
        if (coef.is_zero()) break;
      } else {
        rest.exponents[i] = m.exponents[i];
      }
    }
    r.add_term(rest, coef);
  }
  return r;
}

SparsePoly SparsePoly::translate(const std::vector<Rational>& shift) const {
  require(static_cast<int>(shift.size()) == arity_, errc::arity_mismatch,
          "translate: wrong shift arity");
  // Per-variable binomial powers (x_i + s_i)^e, memoized.
  std::vector<std::vector<SparsePoly>> pows(arity_);
  auto power_of = [&](int i, int e) -> const SparsePoly& {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(constant(arity_, Rational(1)));
    while (static_cast<int>(tab.size()) <= e) {
      SparsePoly lin = variable(arity_, i);
      lin.add_term(Monomial(arity_), shift[i]);
      tab.push_back(tab.back() * lin);
    }
    return tab[e];
  };
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(arity_, c);
    for (int i = 0; i < arity_; ++i)
      if (m.exponents[i] > 0) t = t * power_of(i, m.exponents[i]);
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::affine_shift(const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta) const {
  require(static_cast<int>(alpha.size()) == arity_ &&
              static_cast<int>(beta.size()) == arity_,
          errc::arity_mismatch, "affine_shift: wrong vector arity");
  int na = arity_ + 1;
  std::vector<std::vector<SparsePoly>> pows(arity_);
  auto power_of = [&](int i, int e) -> const SparsePoly& {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(constant(na, Rational(1)));
    while (static_cast<int>(tab.size()) <= e) {
      SparsePoly lin = variable(na, i);
      lin.add_term([&] {
        Monomial y(na);
        y.exponents[na - 1] = 1;
        return y;
      }(), alpha[i]);
      lin.add_term(Monomial(na), beta[i]);
      tab.push_back(tab.back() * lin);
    }
    return tab[e];
  };
  SparsePoly r(na);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(na, c);
    for (int i = 0; i < arity_; ++i)
      if (m.exponents[i] > 0) t = t * power_of(i, m.exponents[i]);
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::hom_component(int k) const {
  require(k >= 0, errc::precondition, "hom_component: negative degree");
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == k) r.terms_.emplace(m, c);
  return r;
}

SparsePoly SparsePoly::hom_component_leq(int k) const {
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() <= k) r.terms_.emplace(m, c);
  return r;
}

SparsePoly SparsePoly::truncate_head_degree(int m) const {
  SparsePoly r(arity_);
  for (const auto& [mon, c] : terms_)
    if (head_degree(mon) < m) r.terms_.emplace(mon, c);
  return r;
}

SparsePoly SparsePoly::partial_derivative(int var, int order) const {
  require(order >= 0, errc::precondition, "negative derivative order");
  require(var >= 0 && var < arity_, errc::precondition, "bad variable index");
  SparsePoly r = *this;
  for (int k = 0; k < order; ++k) {
    SparsePoly next(arity_);
    for (const auto& [m, c] : r.terms_) {
      int e = m.exponents[var];
      if (e == 0) continue;
      Monomial dm = m;
      dm.exponents[var] = e - 1;
      next.add_term(dm, c * Rational(e));
    }
    r = std::move(next);
    if (r.is_zero()) break;
  }
  return r;
}

SparsePoly SparsePoly::extend_arity(int new_arity) const {
  require(new_arity >= arity_, errc::precondition, "extend_arity shrinks");
  SparsePoly r(new_arity);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_arity);
    std::copy(m.exponents.begin(), m.exponents.end(), mm.exponents.begin());
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

SparsePoly SparsePoly::drop_last_var() const {
  require(arity_ >= 1, errc::precondition, "drop_last_var on arity 0");
  SparsePoly r(arity_ - 1);
  for (const auto& [m, c] : terms_) {
    require(m.exponents.back() == 0, errc::precondition,
            "drop_last_var: variable occurs");
    Monomial mm(arity_ - 1);
    std::copy(m.exponents.begin(), m.exponents.end() - 1, mm.exponents.begin());
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

SparsePoly SparsePoly::eval_last_var(const Rational& c) const {
  return substitute({arity_ - 1}, {c}).drop_last_var();
}

std::vector<SparsePoly> SparsePoly::coefficients_in(int var) const {
  int d = std::max(0, degree_in(var));
  std::vector<SparsePoly> out(d + 1, SparsePoly(arity_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    int e = mm.exponents[var];
    mm.exponents[var] = 0;
    out[e].add_term(mm, c);
  }
  return out;
}

SparsePoly SparsePoly::canonical_normalize() const {
  require(!is_zero(), errc::zero_input, "normalize of zero polynomial");
  return scale(leading_coefficient().inv());
}

std::optional<SparsePoly> lex_divide(const SparsePoly& f, const SparsePoly& g) {
  require(!g.is_zero(), errc::zero_input, "lex_divide: zero divisor");
  require(f.arity() == g.arity(), errc::arity_mismatch, "lex_divide: arity mismatch");
  SparsePoly q(f.arity());
  SparsePoly r = f;
  const auto& [gm, gc] = g.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!gm.divides(rm)) return std::nullopt;
    Monomial qm = rm / gm;
    Rational qc = rc / gc;
    q.add_term(qm, qc);
    r -= SparsePoly::mul(g, SparsePoly::term(f.arity(), qm, qc));
  }
  return q;
}

std::vector<std::pair<Rational, SparsePoly>> fischer_decompose(
    int arity, const Monomial& m) {
  require(m.arity() == arity, errc::arity_mismatch, "fischer: arity mismatch");
  int D = m.total_degree();
  require(D >= 1, errc::precondition, "fischer: degree must be >= 1");
  require(D <= 30, errc::resource, "fischer: degree too large for enumeration");
  // Signed power-sum identity on D variable copies:
  //   z_1...z_D = 1/(2^(D-1) D!) * sum over eps in {+-1}^(D-1) of
  //               (prod eps) * (z_1 + eps_2 z_2 + ... + eps_D z_D)^D.
  // Copies of the same variable merge, which caps the number of distinct
  // linear forms at prod(e_i + 1).
  std::vector<int> var_of_copy;
  for (int i = 0; i < arity; ++i)
    for (int k = 0; k < m.exponents[i]; ++k) var_of_copy.push_back(i);

  std::map<std::vector<long>, Rational> weight_by_form;
  long count = 1L << (D - 1);
  for (long mask = 0; mask < count; ++mask) {
    std::vector<long> coeffs(arity, 0);
    coeffs[var_of_copy[0]] += 1;
    int sign = 1;
    for (int j = 1; j < D; ++j) {
      int eps = (mask >> (j - 1)) & 1 ? -1 : 1;
      sign *= eps;
      coeffs[var_of_copy[j]] += eps;
    }
    weight_by_form[coeffs] += Rational(sign);
  }

  mpz_class fact = 1;
  for (int k = 2; k <= D; ++k) fact *= k;
  Rational norm(mpz_class(1), fact * mpz_class(count));

  std::vector<std::pair<Rational, SparsePoly>> out;
  for (const auto& [coeffs, w] : weight_by_form) {
    if (w.is_zero()) continue;
    SparsePoly form(arity);
    for (int i = 0; i < arity; ++i)
      if (coeffs[i] != 0)
        form += SparsePoly::variable(arity, i).scale(Rational(coeffs[i]));
    if (form.is_zero()) continue;
    out.emplace_back(w * norm, std::move(form));
  }
  return out;
}

}  // namespace degfac
