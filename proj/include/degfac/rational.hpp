#ifndef DEGFAC_RATIONAL_HPP
#define DEGFAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "degfac/error.hpp"

namespace degfac {

/// Exact rational scalar. Always stored reduced with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    require(d != 0, errc::zero_input, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    require(d != 0, errc::zero_input, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw df_error(errc::parse, "malformed rational: '" + s + "'");
    require(q.get_den() != 0, errc::parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// bit(r) = log2(max(|num|, den)); bit(0) = 0.
  double bit() const {
    if (is_zero()) return 0.0;
    mpz_class m = abs(v_.get_num());
    if (v_.get_den() > m) m = v_.get_den();
    signed long exp;
    double d = mpz_get_d_2exp(&exp, m.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
  }

  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), errc::zero_input, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inv() const {
    require(!is_zero(), errc::zero_input, "inverse of zero");
    return wrap(1 / v_);
  }

  Rational pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return wrap(r);
  }

  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

}  // namespace degfac

#endif
