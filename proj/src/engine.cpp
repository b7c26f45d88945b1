#include "degfac/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "degfac/error.hpp"
#include "degfac/hensel.hpp"
#include "degfac/hitting.hpp"
#include "degfac/poly_text.hpp"
#include "degfac/unifactor.hpp"
#include "degfac/unipoly.hpp"

namespace degfac {

namespace {

// Upper bound on the y-degree of w(x + alpha*y): the largest sum of
// exponents over the support of alpha across the terms of w.
int line_degree_bound(const SparsePoly& w, const std::vector<Rational>& alpha) {
  int best = -1;
  for (const auto& [m, c] : w.terms()) {
    int s = 0;
    for (int i = 0; i < w.arity(); ++i)
      if (!alpha[i].is_zero()) s += m.exponents[i];
    best = std::max(best, s);
  }
  return best;
}

std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// (t + a*y)^e as dense coefficients via the binomial theorem.
std::vector<Rational> binomial_power(const Rational& t, const Rational& a, int e) {
  std::vector<Rational> out(e + 1);
  Rational comb(1);
  for (int k = 0; k <= e; ++k) {
    out[k] = comb * t.pow(e - k) * a.pow(k);
    comb = comb * Rational(e - k) / Rational(k + 1);
  }
  return out;
}

// The univariate restriction w(tau + alpha*y).
UniPoly restrict_line(const SparsePoly& w, const std::vector<Rational>& alpha,
                      const std::vector<Rational>& tau) {
  int n = w.arity();
  std::vector<Rational> acc;
  for (const auto& [m, c] : w.terms()) {
    Rational s = c;
    bool dead = false;
    std::vector<std::pair<int, int>> active;
    for (int i = 0; i < n; ++i) {
      int e = m.exponents[i];
      if (e == 0) continue;
      if (alpha[i].is_zero()) {
        if (tau[i].is_zero()) {
          dead = true;
          break;
        }
        s *= tau[i].pow(e);
      } else {
        active.push_back({i, e});
      }
    }
    if (dead) continue;
    std::vector<Rational> poly{s};
    for (auto [i, e] : active) poly = convolve(poly, binomial_power(tau[i], alpha[i], e));
    if (acc.size() < poly.size()) acc.resize(poly.size(), Rational(0));
    for (size_t k = 0; k < poly.size(); ++k) acc[k] += poly[k];
  }
  return UniPoly(std::move(acc));
}

// w(x + tau + alpha*y) modulo <x>^m via the Taylor expansion
// sum_{|mu| < m} x^mu * (d^mu w / mu!)(tau + alpha*y). Arity n+1, y last.
SparsePoly shifted_truncated(const SparsePoly& w, const std::vector<Rational>& alpha,
                             const std::vector<Rational>& tau, int m,
                             long term_budget) {
  int n = w.arity();
  SparsePoly out(n + 1);
  Monomial mu(n);
  std::function<void(int, int, const SparsePoly&, const Rational&)> rec =
      [&](int var, int rem, const SparsePoly& dw, const Rational& fact) {
        if (dw.is_zero()) return;
        if (var == n) {
          UniPoly u = restrict_line(dw, alpha, tau);
          if (u.is_zero()) return;
          Rational inv = fact.inv();
          for (int k = 0; k <= u.degree(); ++k) {
            Rational c = u.coeff(k) * inv;
            if (c.is_zero()) continue;
            Monomial mm(n + 1);
            for (int i = 0; i < n; ++i) mm.exponents[i] = mu.exponents[i];
            mm.exponents[n] = k;
            out.add_term(mm, c);
          }
          require(out.sparsity() <= term_budget, errc::resource,
                  "shifted_truncated: term budget exceeded");
          return;
        }
        SparsePoly cur = dw;
        Rational f = fact;
        for (int e = 0; e <= rem; ++e) {
          mu.exponents[var] = e;
          if (e > 0) {
            cur = cur.partial_derivative(var);
            f *= Rational(e);
            if (cur.is_zero()) break;
          }
          rec(var + 1, rem - e, cur, f);
        }
        mu.exponents[var] = 0;
      };
  rec(0, m - 1, w, Rational(1));
  return out;
}

// Runs the subset loop and Hensel lifts for one shift point. `u` is the
// univariate restriction at that shift. Levels beyond 0 take derivatives in
// y to expose repeated factors (one level per multiplicity present in u).
void process_shift(const SparsePoly& w, const std::vector<Rational>& alpha,
                   const std::vector<Rational>& tau, const UniPoly& u,
                   bool with_levels, int m, const EngineConfig& cfg,
                   EngineStats& stats, std::vector<SparsePoly>& sink) {
  int n = w.arity();
  std::vector<int> levels{0};
  if (with_levels)
    for (const auto& [p, mult] : squarefree_decompose(u))
      if (mult >= 2 && u.degree() - (mult - 1) >= 1) levels.push_back(mult - 1);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  SparsePoly shifted;
  bool have_shifted = false;
  std::vector<Rational> back(n);
  for (int i = 0; i < n; ++i) back[i] = -tau[i];

  for (int level : levels) {
    UniPoly ui = u;
    for (int k = 0; k < level; ++k) ui = ui.derivative();
    if (ui.degree() < 1) continue;
    UnivariateFactorization fac = factor_univariate(ui);
    std::vector<int> elig;
    for (size_t j = 0; j < fac.factors.size(); ++j) {
      const UniFactor& uf = fac.factors[j];
      if (uf.poly.degree() * uf.multiplicity <= cfg.d) elig.push_back(static_cast<int>(j));
    }
    if (elig.empty()) continue;

    // Every nonempty subset of the eligible factors whose total degree
    // (with multiplicity) stays within d is a split g0 = prod F_i^{e_i}.
    std::vector<std::vector<int>> subsets;
    std::vector<int> chosen;
    std::function<void(size_t, int)> pick = [&](size_t from, int rem) {
      if (!chosen.empty()) {
        require(subsets.size() < 4096, errc::resource,
                "candidate subsets exceed the resource cap at this shift");
        subsets.push_back(chosen);
      }
      for (size_t j = from; j < elig.size(); ++j) {
        const UniFactor& uf = fac.factors[elig[j]];
        int cost = uf.poly.degree() * uf.multiplicity;
        if (cost <= rem) {
          chosen.push_back(elig[j]);
          pick(j + 1, rem - cost);
          chosen.pop_back();
        }
      }
    };
    pick(0, cfg.d);
    if (subsets.empty()) continue;

    if (!have_shifted) {
      shifted = shifted_truncated(w, alpha, tau, m, cfg.term_budget);
      have_shifted = true;
    }
    SparsePoly fi = level == 0 ? shifted : shifted.partial_derivative(n, level);

    for (const auto& sel : subsets) {
      UniPoly g0 = UniPoly::constant(Rational(1));
      for (int j : sel) g0 = g0 * fac.factors[j].poly.pow(fac.factors[j].multiplicity);
      auto [h0, r0] = ui.divmod(g0);
      require(r0.is_zero(), errc::internal, "initial split does not divide");
      ++stats.lifts;
      auto [gl, hl] = iterate_lift(fi, g0, h0, cfg.d);
      SparsePoly cand = gl.eval_last_var(Rational(0)).translate(back);
      if (cand.degree() >= 1 && cand.degree() <= cfg.d)
        sink.push_back(cand.canonical_normalize());
    }
  }
}

// One direction alpha of the outer loop: scan shift points in graded-grid
// order, fully processing every shift that improves the quality of the
// univariate restriction (degree, then square-free part degree). Stops as
// soon as a shift certifies (restriction square-free of the maximal
// possible degree: then the split is coprime for every factor of interest)
// or after delta_stall shifts without improvement.
void scan_direction(const SparsePoly& w, const std::vector<Rational>& alpha,
                    bool with_levels, const EngineConfig& cfg, EngineStats& stats,
                    std::vector<SparsePoly>& sink) {
  int n = w.arity();
  int bound = line_degree_bound(w, alpha);
  if (bound < 1) return;
  int ell = 0;
  while ((1 << ell) <= cfg.d) ++ell;
  int m = 1 << ell;
  long cap = cfg.mode == SearchMode::budgeted ? cfg.delta_budget : 1000000L;
  std::pair<int, int> best{-2, -2};
  int stall = 0;
  long chunk = 64;
  std::vector<std::vector<Rational>> taus = delta_search_sequence(n, std::min(cap, chunk));
  auto maybe_shuffle = [&] {
    if (!cfg.randomized || taus.size() < 2) return;
    std::mt19937_64 rng(cfg.seed ? cfg.seed : std::random_device{}());
    std::shuffle(taus.begin() + 1, taus.end(), rng);  // keep the zero shift first
  };
  maybe_shuffle();
  for (long idx = 0; idx < cap; ++idx) {
    if (idx >= static_cast<long>(taus.size())) {
      if (static_cast<long>(taus.size()) >= cap) break;
      chunk *= 4;
      taus = delta_search_sequence(n, std::min(cap, chunk));
      maybe_shuffle();
      if (idx >= static_cast<long>(taus.size())) break;
    }
    const std::vector<Rational>& tau = taus[idx];
    ++stats.shifts;
    UniPoly u = restrict_line(w, alpha, tau);
    std::pair<int, int> q{-1, -1};
    if (u.degree() >= 1) {
      UniPoly g = gcd(u, u.derivative());
      q = {u.degree(), u.degree() - g.degree()};
    }
    if (q > best) {
      best = q;
      stall = 0;
      if (u.degree() >= 1) process_shift(w, alpha, tau, u, with_levels, m, cfg, stats, sink);
      if (q.first == bound && q.second == q.first) break;
    } else if (++stall >= cfg.delta_stall) {
      break;
    }
  }
}

// Factor-multiplicity by repeated exact division; doubles as the soundness
// check g^e | f, g^{e+1} does not divide f.
int exact_multiplicity(const SparsePoly& f, const SparsePoly& g) {
  int e = 0;
  SparsePoly r = f;
  while (true) {
    auto q = lex_divide(r, g);
    if (!q) break;
    r = *q;
    ++e;
  }
  return e;
}

void check_config(const EngineConfig& cfg) {
  require(cfg.d >= 1, errc::precondition, "engine: degree bound must be >= 1");
  require(cfg.delta_budget >= 1 && cfg.delta_stall >= 1 && cfg.term_budget >= 1,
          errc::precondition, "engine: budgets must be positive");
}

}  // namespace

bool poly_canonical_less(const SparsePoly& a, const SparsePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

CandidateList candidate_factors_mult_one(const SparsePoly& f, const EngineConfig& cfg) {
  require(!f.is_zero(), errc::zero_input, "candidate_factors_mult_one: zero input");
  check_config(cfg);
  CandidateList out;
  if (f.degree() < 1) return out;
  int n = f.arity();
  EngineStats stats;
  std::vector<SparsePoly> sink;
  for (const auto& alpha : hitting_set(cfg.d, n)) {
    ++stats.directions;
    scan_direction(f, alpha, false, cfg, stats, sink);
  }
  std::sort(sink.begin(), sink.end(), poly_canonical_less);
  sink.erase(std::unique(sink.begin(), sink.end()), sink.end());
  out.entries = std::move(sink);
  return out;
}

int multiplicity(const SparsePoly& f, const SparsePoly& g, int var,
                 const PitBackend& pit) {
  require(!f.is_zero(), errc::zero_input, "multiplicity: zero polynomial");
  require(f.arity() == g.arity(), errc::arity_mismatch, "multiplicity: arity mismatch");
  require(g.degree() >= 1, errc::precondition, "multiplicity: factor must be non-constant");
  require(var >= 0 && var < g.arity(), errc::precondition, "multiplicity: bad variable");
  require(!g.partial_derivative(var).is_zero(), errc::precondition,
          "multiplicity: factor does not depend on the chosen variable");
  int a = 0;
  SparsePoly df = f;
  while (divides(df, g, pit)) {
    ++a;
    require(a <= f.degree(), errc::internal, "multiplicity: derivative chain stuck");
    df = df.partial_derivative(var);
  }
  return a;
}

bool is_irreducible_low_degree(const SparsePoly& g) {
  require(!g.is_zero() && g.degree() >= 1, errc::precondition,
          "is_irreducible_low_degree: input must be non-constant");
  SparsePoly gn = g.canonical_normalize();
  if (gn.degree() == 1) return true;
  static thread_local std::map<std::string, bool> memo;
  std::string key = std::to_string(gn.arity()) + "|" + print_poly(gn);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  EngineConfig sub;
  sub.d = gn.degree() - 1;
  bool irr = factor_low_degree(gn, sub).factors.entries.empty();
  memo.emplace(key, irr);
  return irr;
}

FactorReport factor_low_degree(const SparsePoly& f, const EngineConfig& cfg) {
  require(!f.is_zero(), errc::zero_input, "factor_low_degree: zero input");
  check_config(cfg);
  FactorReport rep;
  if (f.degree() < 1) {
    rep.complete_product = true;
    return rep;
  }
  int n = f.arity();
  auto hs = hitting_set(cfg.d, n);
  SparsePoly w = f;
  std::set<std::string> seen;
  int accounted = 0;
  bool progress = true;
  while (progress && accounted < f.degree()) {
    progress = false;
    if (w.degree() < 1) break;
    for (const auto& alpha : hs) {
      ++rep.stats.directions;
      std::vector<SparsePoly> sink;
      scan_direction(w, alpha, true, cfg, rep.stats, sink);
      for (const auto& cand : sink) {
        std::string key = print_poly(cand);
        if (!seen.insert(key).second) continue;
        ++rep.stats.candidates;
        if (!is_irreducible_low_degree(cand)) continue;
        int e = exact_multiplicity(f, cand);
        if (e < 1) continue;
        rep.factors.entries.push_back({cand, e});
        accounted += e * cand.degree();
        while (true) {
          auto q = lex_divide(w, cand);
          if (!q) break;
          w = *q;
        }
        ++rep.stats.restarts;
        progress = true;
        break;
      }
      if (progress || accounted == f.degree()) break;
    }
  }
  std::sort(rep.factors.entries.begin(), rep.factors.entries.end(),
            [](const FactorEntry& a, const FactorEntry& b) {
              return poly_canonical_less(a.poly, b.poly);
            });
  rep.complete_product = accounted == f.degree();
  return rep;
}

FactorList all_low_degree_factors(const SparsePoly& f, const EngineConfig& cfg) {
  return factor_low_degree(f, cfg).factors;
}

}  // namespace degfac
