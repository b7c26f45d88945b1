#include "doctest.h"

#include <random>
#include <set>

#include "degfac/hitting.hpp"
#include "degfac/poly_text.hpp"

using namespace degfac;

namespace {

std::vector<Rational> pt(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("small hitting sets are enumerated in order") {
  auto h12 = hitting_set(1, 2);
  REQUIRE(h12.size() == 3);
  CHECK(h12[0] == pt({0, 0}));
  CHECK(h12[1] == pt({1, 0}));
  CHECK(h12[2] == pt({0, 1}));

  auto h0 = hitting_set(0, 3);
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == pt({0, 0, 0}));

  CHECK(hitting_set(3, 2).size() == 16);
  CHECK(hitting_set(3, 3).size() == 64);
  CHECK(hitting_set(3, 4).size() == 175);
  CHECK(hitting_set_size(3, 4) == doctest::Approx(175));
}

TEST_CASE("explicit value sets") {
  HittingSet h = build_hitting_set(1, 2, {Rational(0), Rational(5)});
  REQUIRE(h.points.size() == 3);
  CHECK(h.points[0] == pt({0, 0}));
  CHECK(h.points[1] == pt({5, 0}));
  CHECK(h.points[2] == pt({0, 5}));

  // values {0..d} reproduce the default construction
  HittingSet hd = build_hitting_set(2, 3, {Rational(0), Rational(1), Rational(2)});
  CHECK(hd.points == hitting_set(2, 3));

  CHECK_THROWS_AS(build_hitting_set(1, 2, {Rational(3), Rational(3)}), df_error);
  CHECK_THROWS_AS(build_hitting_set(1, 2, {Rational(3)}), df_error);
}

TEST_CASE("every sparse adversary up to degree 3 in 4 variables is hit") {
  // single monomials are the worst case for low-support point sets
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 3; ++d) {
      auto pts = hitting_set(d, n);
      std::function<void(int, int, Monomial&)> rec = [&](int var, int rem,
                                                         Monomial& m) {
        if (var == n) {
          SparsePoly p = SparsePoly::term(n, m, Rational(1));
          CHECK(first_nonvanishing(p, pts).has_value());
          return;
        }
        for (int e = 0; e <= rem; ++e) {
          m.exponents[var] = e;
          rec(var + 1, rem - e, m);
        }
        m.exponents[var] = 0;
      };
      Monomial m(n);
      rec(0, d, m);
    }
}

TEST_CASE("random low degree polynomials are hit") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> cd(-5, 5);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 4;
    int d = 1 + t % 3;
    SparsePoly p(n);
    for (int k = 0; k < 4; ++k) {
      Monomial m(n);
      int rem = d;
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> ed(0, rem);
        m.exponents[i] = ed(rng);
        rem -= m.exponents[i];
      }
      int c = cd(rng);
      if (c) p.add_term(m, Rational(c));
    }
    if (p.is_zero()) continue;
    auto w = first_nonvanishing(p, hitting_set(d, n));
    REQUIRE(w.has_value());
    CHECK_FALSE(p.evaluate(*w).is_zero());
  }
}

TEST_CASE("zero polynomial is never hit") {
  CHECK_FALSE(first_nonvanishing(SparsePoly::zero(3), hitting_set(2, 3)).has_value());
}

TEST_CASE("shift search sequence") {
  auto s1 = delta_search_sequence(1, 3);
  REQUIRE(s1.size() == 3);
  CHECK(s1[0] == pt({0}));
  CHECK(s1[1] == pt({1}));
  CHECK(s1[2] == pt({2}));

  auto s2 = delta_search_sequence(2, 4);
  REQUIRE(s2.size() == 4);
  CHECK(s2[0] == pt({0, 0}));
  CHECK(s2[1] == pt({1, 0}));
  CHECK(s2[2] == pt({0, 1}));
  CHECK(s2[3] == pt({1, 1}));

  // no duplicates even deep into the sequence
  auto s3 = delta_search_sequence(3, 200);
  std::set<std::vector<Rational>> seen(s3.begin(), s3.end());
  CHECK(seen.size() == s3.size());
}
