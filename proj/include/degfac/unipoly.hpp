#ifndef DEGFAC_UNIPOLY_HPP
#define DEGFAC_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "degfac/rational.hpp"
#include "degfac/sparse_poly.hpp"

namespace degfac {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(int k, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  Rational lc() const;
  bool is_monic() const { return !is_zero() && lc().is_one(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly scale(const Rational& k) const;
  UniPoly monic() const { return scale(lc().inv()); }
  UniPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  UniPoly pow(int e) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  SparsePoly to_sparse(int arity, int var) const;
  static UniPoly from_sparse(const SparsePoly& p, int var);

  /// Canonical comparison: degree first, then coefficient vectors.
  static bool canonical_less(const UniPoly& a, const UniPoly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct XgcdResult {
  UniPoly u, v, g;  // u*a + v*b = g, g monic
};

/// Extended Euclid with monic gcd; errors when both inputs are zero.
/// Degree contract: deg(u) < deg(b/g), deg(v) < deg(a/g) when both
/// quotients are non-constant.
XgcdResult xgcd(const UniPoly& a, const UniPoly& b);

/// Yun's square-free decomposition: f = lc * prod p_i^i, the p_i monic
/// square-free and pairwise coprime. Entries are (p_i, i) with deg p_i > 0.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f);

/// Sylvester resultant of nonzero g, h: determinant of the (D+d)x(D+d)
/// matrix with d rows of h-coefficients above D rows of g-coefficients
/// (d = deg g, D = deg h). Zero iff deg(gcd(g, h)) > 0.
Rational resultant_univariate(const UniPoly& g, const UniPoly& h);

}  // namespace degfac

#endif
