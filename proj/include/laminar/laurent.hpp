#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace laminar {

// Exact Laurent polynomial with half-integer exponents: the coefficient at
// key e is the coefficient of x^(e/2). All arithmetic is integer-exact and
// zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial term(long long coeff, int doubled_exp) {
    LaurentPolynomial p;
    if (coeff != 0) p.c_[doubled_exp] = coeff;
    return p;
  }
  static LaurentPolynomial one() { return term(1, 0); }

  const std::map<int, long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  long long coeff(int doubled_exp) const {
    auto it = c_.find(doubled_exp);
    return it == c_.end() ? 0 : it->second;
  }

  void add_term(int doubled_exp, long long coeff) {
    if (coeff == 0) return;
    long long& v = c_[doubled_exp];
    v += coeff;
    if (v == 0) c_.erase(doubled_exp);
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [e, v] : b.c_) r.add_term(e, v);
    return r;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [e, v] : b.c_) r.add_term(e, -v);
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, va] : a.c_)
      for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
    return r;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  LaurentPolynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("LaurentPolynomial::pow: negative power");
    LaurentPolynomial r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Substitute x -> x^(-1).
  LaurentPolynomial invert_variable() const {
    LaurentPolynomial r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
  }

  // Substitute x -> x^k for integer k (k may be negative).
  LaurentPolynomial stretch(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, v] : c_) r.add_term(e * k, v);
    return r;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
      if (!first) os << (v >= 0 ? " + " : " - ");
      else if (v < 0) os << "-";
      long long mag = v < 0 ? -v : v;
      bool unit = mag == 1 && e != 0;
      if (!unit) os << mag;
      if (e != 0) {
        if (!unit) os << "*";
        os << var;
        if (e != 2) {
          os << "^";
          if (e % 2 == 0) os << (e / 2);
          else os << "(" << e << "/2)";
        }
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, long long> c_;
};

// Exact Gaussian integer, used to evaluate polynomials at roots of unity.
struct GaussInt {
  long long re = 0;
  long long im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
};

// Evaluate at x^(1/2) = i, i.e. each doubled exponent e contributes i^e.
inline GaussInt evaluate_at_half_power_i(const LaurentPolynomial& p) {
  GaussInt total;
  for (const auto& [e, v] : p.coeffs()) {
    int r = ((e % 4) + 4) % 4;
    switch (r) {
      case 0: total.re += v; break;
      case 1: total.im += v; break;
      case 2: total.re -= v; break;
      case 3: total.im -= v; break;
    }
  }
  return total;
}

}  // namespace laminar
