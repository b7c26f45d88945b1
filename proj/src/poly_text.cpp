#include "degfac/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace degfac {

namespace {

// Recursive-descent parser producing polynomials with a provisional arity
// large enough for every variable seen; the result is shrunk or checked at
// the end.
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  SparsePoly parse(int requested_arity) {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    int arity = requested_arity >= 0 ? requested_arity : max_var_;
    if (requested_arity >= 0 && max_var_ > requested_arity)
      fail("variable index exceeds requested arity");
    // Terms were built at the provisional cap; re-emit at the final arity.
    SparsePoly out(arity);
    for (const auto& [m, c] : p.terms()) {
      Monomial mm(arity);
      for (int i = 0; i < arity; ++i) mm.exponents[i] = m.exponents[i];
      out.add_term(mm, c);
    }
    return out;
  }

 private:
  static constexpr int kCap = 64;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": " << msg;
    throw df_error(errc::parse, os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  SparsePoly expr() {
    SparsePoly acc = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
        // implicit multiplication, e.g. "3x1" or "2(x1+1)"
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    SparsePoly base = atom();
    if (eat('^')) {
      long e = integer();
      if (e < 0) fail("negative exponent");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  SparsePoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected variable index after 'x'");
      int idx = std::stoi(s_.substr(start, pos_ - start));
      if (idx < 1 || idx > kCap) fail("variable index out of range");
      max_var_ = std::max(max_var_, idx);
      return SparsePoly::variable(kCap, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (eat('/')) {
        skip_ws();
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) fail("expected denominator");
        std::string den = s_.substr(dstart, pos_ - dstart);
        if (den == "0") fail("zero denominator");
        return SparsePoly::constant(kCap, Rational::parse(num + "/" + den));
      }
      return SparsePoly::constant(kCap, Rational::parse(num));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int max_var_ = 0;
};

void print_monomial(std::ostream& os, const Monomial& m, bool coeff_printed) {
  bool first = !coeff_printed;
  for (int i = 0; i < m.arity(); ++i) {
    int e = m.exponents[i];
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << (i + 1);
    if (e > 1) os << "^" << e;
  }
}

}  // namespace

SparsePoly parse_poly(const std::string& text, int arity) {
  return Parser(text).parse(arity);
}

std::string print_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex: leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (m.is_constant()) {
      os << a;
    } else if (a.is_one()) {
      print_monomial(os, m, false);
    } else {
      os << a;
      print_monomial(os, m, true);
    }
  }
  return os.str();
}

}  // namespace degfac
