// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every numeric check is exact; randomness is seeded and fixed.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "degfac/batch_eval.hpp"
#include "degfac/divres.hpp"
#include "degfac/engine.hpp"
#include "degfac/formula.hpp"
#include "degfac/hensel.hpp"
#include "degfac/hitting.hpp"
#include "degfac/poly_text.hpp"
#include "degfac/unifactor.hpp"

using namespace degfac;
using clk = std::chrono::steady_clock;

namespace {

double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int rint(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SparsePoly random_linear(std::mt19937& rng, int n) {
  SparsePoly p(n);
  bool nonconst = false;
  for (int i = 0; i < n; ++i) {
    int c = rint(rng, -3, 3);
    if (c) {
      Monomial m(n);
      m.exponents[i] = 1;
      p.add_term(m, Rational(c));
      nonconst = true;
    }
  }
  if (!nonconst) {
    Monomial m(n);
    m.exponents[0] = 1;
    p.add_term(m, Rational(1));
  }
  int c0 = rint(rng, -3, 3);
  if (c0) p.add_term(Monomial(n), Rational(c0));
  return p;
}

// Monic-in-x1 polynomial x1^D + x2*t, irreducible over Q by the Eisenstein
// criterion at the prime x2 of Q[x2..xn] (every non-leading x1-coefficient
// carries x2, the x1-free coefficient is x2*u with u a nonzero integer) and
// Gauss's lemma. Gives the test its own irreducibility certificates,
// independent of the library under test.
SparsePoly eisenstein(std::mt19937& rng, int n, int D) {
  SparsePoly g(n);
  {
    Monomial lead(n);
    lead.exponents[0] = D;
    g.add_term(lead, Rational(1));
  }
  int u = rint(rng, 1, 5) * (rint(rng, 0, 1) ? 1 : -1);
  {
    Monomial m(n);
    m.exponents[1] = 1;
    g.add_term(m, Rational(u));
  }
  int extras = rint(rng, 0, 2);
  for (int t = 0; t < extras && D >= 2; ++t) {
    int a = rint(rng, 1, D - 1);
    int b = rint(rng, 0, D - 1 - a);
    int v = rint(rng, 0, n - 1);
    Monomial m(n);
    m.exponents[1] = 1;
    m.exponents[0] += a;
    m.exponents[v] += b;
    int c = rint(rng, -4, 4);
    if (c) g.add_term(m, Rational(c));
  }
  return g;
}

SparsePoly certified_irreducible(std::mt19937& rng, int n, int D) {
  return D == 1 ? random_linear(rng, n) : eisenstein(rng, n, D);
}

SparsePoly random_sparse(std::mt19937& rng, int n, int deg, int terms) {
  SparsePoly p(n);
  {
    // one term of the exact target degree so deg(p) = deg
    Monomial m(n);
    int rem = deg;
    for (int i = 0; i + 1 < n; ++i) {
      int e = rint(rng, 0, rem);
      m.exponents[i] = e;
      rem -= e;
    }
    m.exponents[n - 1] = rem;
    p.add_term(m, Rational(rint(rng, 1, 6)));
  }
  for (int t = 1; t < terms; ++t) {
    Monomial m(n);
    int rem = rint(rng, 0, deg);
    for (int i = 0; i < n; ++i) {
      int e = rint(rng, 0, rem);
      m.exponents[i] = e;
      rem -= e;
    }
    int c = rint(rng, -6, 6);
    if (c) p.add_term(m, Rational(c));
  }
  if (p.is_zero()) p = SparsePoly::constant(n, Rational(1));
  return p;
}

std::string render(const FactorReport& r) {
  std::ostringstream os;
  for (const auto& e : r.factors.entries)
    os << print_poly(e.poly) << "^" << e.multiplicity << ";";
  os << (r.complete_product ? "c" : "p");
  return os.str();
}

struct Instance {
  SparsePoly f;
  std::vector<std::pair<SparsePoly, int>> expected;  // normalized, sorted
  bool h_trivial = false;
};

// f = c * prod g_i^{e_i} * h with independently certified irreducible g_i
// and h either a nonzero constant or a random sparse polynomial of degree
// 4..6 that the engine (in guaranteed mode) certifies free of degree <= 3
// factors. Expansions past 20000 terms are redrawn to keep single instances
// inside the per-instance time budget.
Instance make_instance(std::mt19937& rng, int n, bool mult_one) {
  for (;;) {
    int k = rint(rng, 1, 3);
    std::vector<std::pair<SparsePoly, int>> gs;
    std::set<std::string> seen;
    for (int i = 0; i < k; ++i) {
      SparsePoly g = certified_irreducible(rng, n, rint(rng, 1, 3));
      std::string key = print_poly(g.canonical_normalize());
      if (!seen.insert(key).second) {
        --i;
        continue;
      }
      gs.push_back({g, mult_one ? 1 : rint(rng, 1, 3)});
    }
    bool h_trivial = rint(rng, 0, 2) == 0;
    SparsePoly h = SparsePoly::constant(n, Rational(rint(rng, 1, 9)));
    if (!h_trivial) {
      for (;;) {
        h = random_sparse(rng, n, rint(rng, 4, 6), 4);
        if (h.degree() < 4) continue;
        EngineConfig cfg;
        cfg.d = 3;
        if (factor_low_degree(h, cfg).factors.entries.empty()) break;
      }
    }
    SparsePoly f = h.scale(Rational(rint(rng, 1, 5), rint(rng, 1, 3)));
    for (const auto& [g, e] : gs) f = f * g.pow(e);
    if (f.sparsity() > 20000) continue;

    Instance in;
    in.f = f;
    in.h_trivial = h_trivial;
    for (auto& [g, e] : gs) in.expected.push_back({g.canonical_normalize(), e});
    std::sort(in.expected.begin(), in.expected.end(),
              [](const auto& a, const auto& b) {
                return poly_canonical_less(a.first, b.first);
              });
    return in;
  }
}

bool reports_match(const FactorReport& r,
                   const std::vector<std::pair<SparsePoly, int>>& expected) {
  if (r.factors.entries.size() != expected.size()) return false;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (!(r.factors.entries[i].poly == expected[i].first)) return false;
    if (r.factors.entries[i].multiplicity != expected[i].second) return false;
  }
  return true;
}

int failures = 0;

void report(int idx, bool pass, const std::string& label,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

// ---- criterion 1 (and data for 5 and 10) ----

std::vector<Instance> c1_instances;
std::vector<FactorReport> c1_reports;

void criterion1() {
  std::mt19937 rng(10001);
  auto suite_start = clk::now();
  bool ok = true;
  double worst = 0;
  std::string why;
  for (int t = 0; t < 200 && ok; ++t) {
    int n = 2 + t % 3;
    Instance in = make_instance(rng, n, false);
    EngineConfig cfg;
    cfg.d = 3;
    auto t0 = clk::now();
    FactorReport r = factor_low_degree(in.f, cfg);
    double dt = secs(t0, clk::now());
    worst = std::max(worst, dt);
    if (!reports_match(r, in.expected)) {
      ok = false;
      why = "instance " + std::to_string(t) + " factorization mismatch";
    }
    if (dt >= 60.0) {
      ok = false;
      why = "instance " + std::to_string(t) + " exceeded 60 s";
    }
    c1_instances.push_back(std::move(in));
    c1_reports.push_back(std::move(r));
  }
  double total = secs(suite_start, clk::now());
  if (total >= 7200.0) {
    ok = false;
    why = "suite exceeded 2 h";
  }
  std::ostringstream d;
  d << "200 instances, worst " << worst << " s, total " << total << " s";
  report(1, ok, "exact recovery of all degree <= 3 factors with multiplicities",
         ok ? d.str() : why);
}

void criterion2() {
  std::mt19937 rng(10002);
  bool ok = true;
  for (int t = 0; t < 100 && ok; ++t) {
    int n = 2 + t % 3;
    Instance in = make_instance(rng, n, true);
    EngineConfig cfg;
    cfg.d = 3;
    CandidateList c = candidate_factors_mult_one(in.f, cfg);
    for (const auto& [g, e] : in.expected) {
      bool found = false;
      for (const auto& cand : c.entries)
        if (cand == g) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
  }
  report(2, ok, "candidate pass lists every multiplicity-one factor",
         ok ? "100 instances" : "missing factor");
}

void criterion3() {
  std::mt19937 rng(10003);
  const ExactPit pit;
  auto start = clk::now();
  bool ok = true;
  long agreements = 0;
  for (int t = 0; t < 1000 && ok; ++t) {
    int n = 2 + t % 3;
    SparsePoly g = random_sparse(rng, n, 1 + t % 3, 4);
    SparsePoly f = t % 2 == 0 ? g * random_sparse(rng, n, rint(rng, 0, 3), 4)
                              : random_sparse(rng, n, rint(rng, 1, 5), 6);
    bool oracle = g.is_constant() || f.is_zero() || lex_divide(f, g).has_value();
    if (divides(f, g, pit) != oracle) ok = false;
    ++agreements;
  }
  double total = secs(start, clk::now());
  if (total >= 300.0) ok = false;
  report(3, ok, "divisibility test agrees with exact division",
         std::to_string(agreements) + " pairs, " + std::to_string(total) + " s");
}

void criterion4() {
  std::mt19937 rng(10004);
  bool ok = true;
  int points_checked = 0;
  for (int t = 0; t < 500 && ok; ++t) {
    int n = 2 + t % 2;
    int y = n - 1;
    // g = (y - p1)(y - p2), h = (y - q1)(y - q2) with the p's and q's free of
    // y; they share a y-dependent factor exactly when some p equals some q,
    // which the construction controls
    auto root = [&]() {
      SparsePoly p = random_sparse(rng, n, rint(rng, 0, 2), 2);
      return p.substitute({y}, {Rational(0)});
    };
    bool shared = t % 2 == 0;
    SparsePoly p1 = root(), p2 = root();
    SparsePoly one = SparsePoly::constant(n, Rational(1));
    SparsePoly q1 = shared ? p1 : p1 + one;
    while (!shared && (q1 == p1 || q1 == p2)) q1 += one;
    SparsePoly q2 = p2 + SparsePoly::constant(n, Rational(rint(rng, 1, 3)));
    while (q2 == p1 || q2 == p2) q2 += one;
    SparsePoly yv = SparsePoly::variable(n, y);
    SparsePoly g = (yv - p1) * (yv - p2);
    SparsePoly h = (yv - q1) * (yv - q2);
    SparsePoly res = sylvester_resultant(g, h, y);
    if (res.is_zero() != shared) ok = false;
    // substitution observation: both polynomials are monic in y, so every
    // point is valid
    if (points_checked < 200) {
      std::vector<Rational> full(n, Rational(0));
      std::vector<Rational> part;
      for (int i = 0; i < n - 1; ++i) {
        full[i] = Rational(rint(rng, -4, 4));
        part.push_back(full[i]);
      }
      if (resultant_at_point(g, h, y, part) != res.evaluate(full)) ok = false;
      ++points_checked;
    }
  }
  report(4, ok, "resultant vanishes exactly on shared y-factors",
         "500 pairs, " + std::to_string(points_checked) + " substitution points");
}

void criterion5() {
  // lift_step postconditions are asserted inside the library on every
  // iteration, so criteria 1 and 2 already exercise them; here the report
  // renderings of two independent runs must be bit-identical, and direct
  // lifts repeated from scratch must agree coefficient for coefficient.
  std::mt19937 rng(10005);
  bool ok = true;
  for (size_t i = 0; i < c1_instances.size() && ok; i += 10) {
    EngineConfig cfg;
    cfg.d = 3;
    FactorReport again = factor_low_degree(c1_instances[i].f, cfg);
    if (render(again) != render(c1_reports[i])) ok = false;
  }
  for (int t = 0; t < 20 && ok; ++t) {
    int n = 1 + t % 3;
    // G monic in the last variable y, H linear in y, coprime at x = 0
    SparsePoly y = SparsePoly::variable(n + 1, n);
    SparsePoly x1 = SparsePoly::variable(n + 1, 0);
    SparsePoly G = y * y + (y * x1).scale(Rational(rint(rng, -2, 2))) + x1 +
                   SparsePoly::constant(n + 1, Rational(2 + t % 3));
    SparsePoly H = y + x1.scale(Rational(rint(rng, -2, 2))) -
                   SparsePoly::constant(n + 1, Rational(1 + t % 4));
    SparsePoly f = G * H;
    std::vector<int> xs(n);
    std::vector<Rational> zeros(n, Rational(0));
    for (int i = 0; i < n; ++i) xs[i] = i;
    UniPoly G0 = UniPoly::from_sparse(G.substitute(xs, zeros), n);
    UniPoly H0 = UniPoly::from_sparse(H.substitute(xs, zeros), n);
    if (gcd(G0, H0).degree() != 0) continue;
    auto [a1, b1] = iterate_lift(f, G0, H0, G.degree());
    auto [a2, b2] = iterate_lift(f, G0, H0, G.degree());
    if (!(a1 == a2) || !(b1.value == b2.value)) ok = false;
    if (!(a1 == G)) ok = false;
  }
  report(5, ok, "Hensel lift postconditions hold and repeated lifts are bit-identical");
}

void criterion6() {
  std::mt19937 rng(10006);
  auto start = clk::now();
  bool ok = true;
  std::uniform_int_distribution<long> cd(-(1L << 16), 1L << 16);
  for (int t = 0; t < 300 && ok; ++t) {
    UniPoly f = UniPoly::constant(Rational(1));
    int parts = rint(rng, 1, 4);
    for (int i = 0; i < parts; ++i) {
      int deg = rint(rng, 1, 4);
      std::vector<Rational> c(deg + 1);
      for (auto& x : c) x = Rational(cd(rng));
      if (c.back().is_zero()) c.back() = Rational(1);
      f = f * UniPoly(std::move(c)).pow(rint(rng, 1, 2));
    }
    UnivariateFactorization fac = factor_univariate(f);
    UniPoly back = UniPoly::constant(fac.sigma);
    for (const auto& uf : fac.factors) {
      if (!uf.poly.is_monic() || uf.poly.degree() < 1) ok = false;
      if (uf.certificate.empty()) ok = false;
      back = back * uf.poly.pow(uf.multiplicity);
    }
    if (!(back == f)) ok = false;
  }
  double total = secs(start, clk::now());
  if (total >= 300.0) ok = false;
  report(6, ok, "univariate factorization multiplies back with certificates",
         "300 products, " + std::to_string(total) + " s");
}

void criterion7() {
  bool ok = true;
  long adversaries = 0;
  for (int n = 1; n <= 4 && ok; ++n)
    for (int d = 0; d <= 3 && ok; ++d) {
      auto pts = hitting_set(d, n);
      for (const Monomial& m : monomials_up_to_degree(n, d)) {
        SparsePoly p = SparsePoly::term(n, m, Rational(1));
        if (!first_nonvanishing(p, pts).has_value()) ok = false;
        ++adversaries;
      }
    }
  std::mt19937 rng(10007);
  for (int t = 0; t < 200 && ok; ++t) {
    int n = 1 + t % 4;
    int d = 1 + t % 3;
    SparsePoly p = random_sparse(rng, n, d, 4);
    if (p.is_zero()) continue;
    auto w = first_nonvanishing(p, hitting_set(d, n));
    if (!w.has_value() || p.evaluate(*w).is_zero()) ok = false;
  }
  report(7, ok, "hitting set hits every nonzero low degree polynomial",
         std::to_string(adversaries) + " monomial adversaries + 200 random");
}

void criterion8() {
  std::mt19937 rng(10008);
  const ExactPit pit;
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    int n = 2 + t % 3;
    int a = t % 5;  // 0 through 4
    SparsePoly g = certified_irreducible(rng, n, rint(rng, 1, 2));
    SparsePoly h = certified_irreducible(rng, n, 3);
    if (print_poly(g.canonical_normalize()) == print_poly(h.canonical_normalize()))
      continue;
    SparsePoly f = h;
    for (int i = 0; i < a; ++i) f = f * g;
    int var = -1;
    for (int i = 0; i < n; ++i)
      if (!g.partial_derivative(i).is_zero()) {
        var = i;
        break;
      }
    if (multiplicity(f, g, var, pit) != a) ok = false;
  }
  report(8, ok, "derivative characterization recovers factor multiplicity",
         "200 instances, a <= 4");
}

void criterion9() {
  std::mt19937 rng(10009);
  bool ok = true;
  std::uniform_int_distribution<long> vd(-99, 99);
  auto leaf_var = [&](int i) {
    auto n = std::make_shared<FormulaNode>();
    n->op = FormulaNode::Op::variable;
    n->index = i;
    return std::shared_ptr<const FormulaNode>(n);
  };
  auto leaf_const = [&]() {
    auto n = std::make_shared<FormulaNode>();
    n->op = FormulaNode::Op::constant;
    n->value = Rational(vd(rng), 1 + std::abs(vd(rng)) % 7);
    return std::shared_ptr<const FormulaNode>(n);
  };
  std::function<std::shared_ptr<const FormulaNode>(int, int)> build =
      [&](int depth, int arity) -> std::shared_ptr<const FormulaNode> {
    if (depth == 0) return rint(rng, 0, 1) ? leaf_var(rint(rng, 1, arity)) : leaf_const();
    auto n = std::make_shared<FormulaNode>();
    n->op = rint(rng, 0, 1) ? FormulaNode::Op::sum : FormulaNode::Op::prod;
    int fan = rint(rng, 2, 3);
    for (int i = 0; i < fan; ++i) {
      FormulaEdge e;
      e.scalar = Rational(vd(rng) % 9, 1 + std::abs(vd(rng)) % 4);
      if (e.scalar.is_zero()) e.scalar = Rational(1);
      e.node = build(depth - 1, arity);
      n->children.push_back(std::move(e));
    }
    return n;
  };
  for (int t = 0; t < 500 && ok; ++t) {
    int arity = 1 + t % 3;
    Formula c;
    c.root = build(rint(rng, 1, 3), arity);
    c.arity = arity;
    std::vector<Rational> a(arity);
    double b = 0;
    for (auto& x : a) {
      x = Rational(vd(rng), 1 + std::abs(vd(rng)) % 11);
      b = std::max(b, x.bit());
    }
    Rational v = eval_formula(c, a);
    double bound = formula_measures(c).bit * std::max(1.0, b);
    if (v.bit() > bound) ok = false;
  }
  report(9, ok, "formula evaluation respects the bit growth bound", "500 pairs");
}

void criterion10() {
  bool ok = !c1_instances.empty();
  for (size_t i = 0; i < c1_instances.size(); ++i)
    if (c1_reports[i].complete_product != c1_instances[i].h_trivial) ok = false;
  report(10, ok, "complete-product flag matches the ground truth cofactor",
         std::to_string(c1_instances.size()) + " instances");
}

void criterion11() {
  bool ok = true;
  long count = 0;
  for (int n = 1; n <= 3 && ok; ++n)
    for (const Monomial& m : monomials_up_to_degree(n, 5)) {
      int D = m.total_degree();
      if (D < 1) continue;
      auto dec = fischer_decompose(n, m);
      long bound = 1;
      for (int e : m.exponents) bound *= e + 1;
      if (static_cast<long>(dec.size()) > bound) ok = false;
      SparsePoly sum = SparsePoly::zero(n);
      for (const auto& [w, lin] : dec) {
        if (lin.degree() != 1 || !(lin.hom_component(1) == lin)) ok = false;
        sum += lin.pow(D).scale(w);
      }
      if (!(sum == SparsePoly::term(n, m, Rational(1)))) ok = false;
      ++count;
    }
  report(11, ok, "Fischer power-sum identity with the length bound",
         std::to_string(count) + " monomials");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
