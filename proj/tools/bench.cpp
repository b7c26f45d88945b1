// Benchmark for the evaluation kernels: serial reference vs OpenMP batch,
// plus a timing of the factorization engine on a synthetic product.
#include <chrono>
#include <iostream>
#include <random>

#include "degfac/batch_eval.hpp"
#include "degfac/engine.hpp"
#include "degfac/poly_text.hpp"

using namespace degfac;
using clk = std::chrono::steady_clock;

namespace {

double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

SparsePoly random_poly(std::mt19937& rng, int n, int deg, int terms) {
  std::uniform_int_distribution<int> cd(-20, 20);
  SparsePoly p(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    int rem = deg;
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> ed(0, rem);
      m.exponents[i] = ed(rng);
      rem -= m.exponents[i];
    }
    int c = cd(rng);
    if (c) p.add_term(m, Rational(c));
  }
  return p;
}

}  // namespace

int main() {
  std::mt19937 rng(7);
  int n = 4;
  SparsePoly p = random_poly(rng, n, 12, 4000);
  std::uniform_int_distribution<int> vd(-50, 50);
  std::vector<std::vector<Rational>> points(2000);
  for (auto& pt : points) {
    pt.resize(n);
    for (auto& c : pt) c = Rational(vd(rng));
  }

  auto t0 = clk::now();
  auto serial = batch_evaluate_serial(p, points);
  auto t1 = clk::now();
  auto parallel = batch_evaluate(p, points);
  auto t2 = clk::now();
  bool equal = serial == parallel;
  std::cout << "batch evaluation over " << points.size() << " points, "
            << p.sparsity() << " terms\n";
  std::cout << "  serial:   " << secs(t0, t1) << "s\n";
  std::cout << "  parallel: " << secs(t1, t2) << "s (identical results: "
            << (equal ? "yes" : "NO") << ")\n";

  SparsePoly g1 = parse_poly("x1+2*x2-x3+1", n);
  SparsePoly g2 = parse_poly("x1^2+x2*x4+3", n);
  SparsePoly f = g1 * g1 * g2 * random_poly(rng, n, 5, 40);
  EngineConfig cfg;
  cfg.d = 2;
  auto t3 = clk::now();
  FactorReport rep = factor_low_degree(f, cfg);
  auto t4 = clk::now();
  std::cout << "factor engine on a degree " << f.degree() << " product: "
            << secs(t3, t4) << "s, " << rep.factors.entries.size()
            << " factor(s), " << rep.stats.lifts << " lift(s)\n";
  return equal ? 0 : 1;
}
