#pragma once

#include <utility>

#include "hecke/poly.hpp"

namespace hecke {

// Rational function in one indeterminate u, kept in normal form:
// numerator and denominator coprime, denominator monic.  With this
// normalization equality is structural, which the verification suites
// rely on throughout.
class RatFunc {
 public:
  RatFunc() : num_(), den_{Rational::one()} {}
  RatFunc(const Rational& a) : num_(Poly::constant(a)), den_{Rational::one()} {}  // NOLINT
  explicit RatFunc(Poly num) : num_(std::move(num)), den_{Rational::one()} {}
  RatFunc(Poly num, Poly den);

  // The indeterminate u itself, optionally shifted: u + shift.
  static RatFunc linear(const Rational& shift) { return RatFunc(Poly::linear(shift)); }
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(Rational::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc inverse() const;
  Rational eval(const Rational& point) const;

  RatFunc operator-() const { return RatFunc(unchecked(), -num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  struct unchecked {};  // tag: operands already coprime, den monic
  RatFunc(unchecked, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_, den_;
};

}  // namespace hecke
