#ifndef DEGFAC_DIVRES_HPP
#define DEGFAC_DIVRES_HPP

#include <optional>
#include <vector>

#include "degfac/sparse_poly.hpp"
#include "degfac/unipoly.hpp"

namespace degfac {

/// Polynomial identity testing backend. The exact backend works on the
/// explicit expansion and is sound and complete.
struct PitBackend {
  virtual ~PitBackend() = default;
  virtual bool is_zero(const SparsePoly& p) const = 0;
  /// A point where p does not vanish, or nullopt when p = 0. `degree_bound`
  /// must be >= deg(p).
  virtual std::optional<std::vector<Rational>> find_nonzero_point(
      const SparsePoly& p, int degree_bound) const = 0;
};

struct ExactPit : PitBackend {
  bool is_zero(const SparsePoly& p) const override { return p.is_zero(); }
  std::optional<std::vector<Rational>> find_nonzero_point(
      const SparsePoly& p, int degree_bound) const override;
};

struct PseudoQuotient {
  SparsePoly q;
  Rational beta;  // g(0)
  int df = 0, dg = 0;
};

/// Truncated geometric-series quotient
/// Q = Hom_{<= df-dg}((f/beta) * (1 + gt + gt^2 + ... + gt^{df-dg})) with
/// gt = 1 - g/beta. Equals the true quotient f/g whenever g divides f.
/// Requires f, g nonzero, g(0) != 0 and deg f >= deg g.
PseudoQuotient pseudo_quotient(const SparsePoly& f, const SparsePoly& g);

/// Exact divisibility test via the pseudo-quotient residual R = f - g*Q and
/// the PIT backend. When g(0) = 0 both polynomials are translated by the
/// first point of H(deg g, n) where g does not vanish.
bool divides(const SparsePoly& f, const SparsePoly& g, const PitBackend& pit);

/// Symbolic Sylvester resultant with respect to variable `yvar`: the exact
/// determinant over the polynomial ring in the remaining variables, with
/// deg_y(g) rows of h-coefficients above deg_y(h) rows of g-coefficients.
/// Identically zero iff gcd(g, h) has positive y-degree. When only one
/// y-degree is zero the result degenerates to a power of that constant
/// coefficient; both zero is an error.
SparsePoly sylvester_resultant(const SparsePoly& g, const SparsePoly& h, int yvar);

/// Res_y(g(a, y), h(a, y)) via the univariate resultant. Requires the
/// leading y-coefficients of g and h not to vanish at a; under that
/// hypothesis it equals sylvester_resultant(g, h, yvar) evaluated at a.
Rational resultant_at_point(const SparsePoly& g, const SparsePoly& h, int yvar,
                            const std::vector<Rational>& a);

}  // namespace degfac

#endif
