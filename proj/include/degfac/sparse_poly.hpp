#ifndef DEGFAC_SPARSE_POLY_HPP
#define DEGFAC_SPARSE_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degfac/monomial.hpp"
#include "degfac/rational.hpp"

namespace degfac {

/// Caps applied during multiplication; -1 means unbounded. `head_degree`
/// bounds the total degree over all variables except the last one (the
/// "x-degree" of a polynomial whose last variable plays the role of y).
struct MulCaps {
  int total = -1;
  int head = -1;
};

/// Sparse multivariate polynomial over Q with a fixed arity.
/// Terms are kept in graded-lex order; no zero coefficients are stored.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit SparsePoly(int arity = 0) : arity_(arity) {}

  static SparsePoly zero(int arity) { return SparsePoly(arity); }
  static SparsePoly constant(int arity, const Rational& c);
  static SparsePoly variable(int arity, int index);
  static SparsePoly term(int arity, const Monomial& m, const Rational& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in a single variable; -1 for the zero polynomial.
  int degree_in(int var) const;
  int sparsity() const { return static_cast<int>(terms_.size()); }

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial(arity_)); }
  /// Leading term under graded-lex.
  const std::pair<const Monomial, Rational>& leading() const;
  Rational leading_coefficient() const { return leading().second; }

  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    return mul(a, b);
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  static SparsePoly mul(const SparsePoly& a, const SparsePoly& b,
                        const MulCaps& caps = {});
  SparsePoly scale(const Rational& c) const;
  SparsePoly pow(int e, const MulCaps& caps = {}) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Substitutes constants for the variables listed in `vars` (parallel to
  /// `values`); arity is unchanged.
  SparsePoly substitute(const std::vector<int>& vars,
                        const std::vector<Rational>& values) const;
  /// f(x + c), same arity.
  SparsePoly translate(const std::vector<Rational>& shift) const;
  /// f(x1 + a1*y + b1, ..., xn + an*y + bn) in arity n+1, y last.
  SparsePoly affine_shift(const std::vector<Rational>& alpha,
                          const std::vector<Rational>& beta) const;

  SparsePoly hom_component(int k) const;
  SparsePoly hom_component_leq(int k) const;
  /// Drops monomials whose degree over the first arity-1 variables is >= m.
  SparsePoly truncate_head_degree(int m) const;
  SparsePoly partial_derivative(int var, int order = 1) const;

  /// Appends fresh variables on the right.
  SparsePoly extend_arity(int new_arity) const;
  /// Drops the last variable; it must not occur.
  SparsePoly drop_last_var() const;
  /// Sets the last variable to a constant and drops it.
  SparsePoly eval_last_var(const Rational& c) const;
  /// Coefficients of powers of `var` (polynomials with `var` zeroed out).
  std::vector<SparsePoly> coefficients_in(int var) const;

  /// Scales so the graded-lex leading coefficient is 1. Errors on zero.
  SparsePoly canonical_normalize() const;

 private:
  int arity_;
  TermMap terms_;
};

/// Exact single-divisor division in graded-lex order: returns q with
/// f = g*q when g divides f, std::nullopt otherwise. Errors when g = 0.
std::optional<SparsePoly> lex_divide(const SparsePoly& f, const SparsePoly& g);

/// Fischer decomposition of a monomial of degree D >= 1 into a weighted sum
/// of D-th powers of homogeneous linear forms: x^m = sum_i alpha_i * L_i^D,
/// with at most prod(e_i + 1) summands.
std::vector<std::pair<Rational, SparsePoly>> fischer_decompose(
    int arity, const Monomial& m);

}  // namespace degfac

#endif
