#ifndef DEGFAC_MONOMIAL_HPP
#define DEGFAC_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace degfac {

/// Exponent vector of fixed arity. Ordered graded-lexicographically.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(int arity) : exponents(arity, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  int arity() const { return static_cast<int>(exponents.size()); }
  int total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }
  bool is_constant() const {
    for (int e : exponents)
      if (e != 0) return false;
    return true;
  }

  /// Componentwise divisibility: does this divide m?
  bool divides(const Monomial& m) const {
    for (int i = 0; i < arity(); ++i)
      if (exponents[i] > m.exponents[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < arity(); ++i) r.exponents[i] += o.exponents[i];
    return r;
  }
  /// Quotient; caller must ensure o divides this.
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < arity(); ++i) r.exponents[i] -= o.exponents[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }

  /// Graded-lex: compare total degree, then exponents left to right.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  }
};

}  // namespace degfac

#endif
