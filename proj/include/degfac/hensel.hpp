#ifndef DEGFAC_HENSEL_HPP
#define DEGFAC_HENSEL_HPP

#include <utility>

#include "degfac/sparse_poly.hpp"
#include "degfac/unipoly.hpp"

namespace degfac {

/// Polynomial in x1..xn, y (y last) considered modulo I^m, I = <x1..xn>:
/// monomials of total x-degree >= m are dropped after every operation.
struct TruncatedPoly {
  SparsePoly value;     // arity n+1
  int trunc_order = 1;  // m

  static TruncatedPoly of(const SparsePoly& p, int m) {
    return {p.truncate_head_degree(m), m};
  }
};

/// State of the quadratic Hensel iteration at level k (truncation order 2^k):
/// f = g*h and u*g + v*h = 1 modulo I^{2^k}, g monic in y.
struct LiftState {
  TruncatedPoly g, h, u, v;
  int level = 0;
};

/// Builds the level-0 state from an exact univariate factorization of
/// f(0,...,0,y) = g0 * h0 with g0 monic and gcd(g0,h0) = 1. Raises a
/// precondition error naming the violated hypothesis otherwise.
LiftState initial_state(const SparsePoly& f, const UniPoly& g0, const UniPoly& h0);

/// One quadratic step: level k -> k+1. All four lift postconditions
/// (product congruence, agreement mod I^{2^k}, Bezout congruence, monicity)
/// are asserted; a failure is an internal error.
LiftState lift_step(const LiftState& s, const SparsePoly& f);

/// Iterates lift_step until 2^l > d and returns (g_l truncated to total
/// degree <= d, h_l).
std::pair<SparsePoly, TruncatedPoly> iterate_lift(const SparsePoly& f,
                                                  const UniPoly& g0,
                                                  const UniPoly& h0, int d);

}  // namespace degfac

#endif
