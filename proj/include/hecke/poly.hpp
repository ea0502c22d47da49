#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Univariate polynomial over Rational, coefficients stored in ascending
// degree with no trailing zeros (the zero polynomial is the empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& a);
  // The indeterminate u, optionally shifted: u + shift.
  static Poly linear(const Rational& shift);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational::zero();
  }
  Rational leading() const { return is_zero() ? Rational::zero() : c_.back(); }

  Rational eval(const Rational& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  // Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;

  // Unique polynomial of degree < #points through the given points
  // (Lagrange). Throws on duplicate abscissae.
  static Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

  std::string str() const;  // human-readable, e.g. "u^2 - 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace hecke
