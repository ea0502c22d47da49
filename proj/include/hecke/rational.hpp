#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace hecke {

// Arbitrary-precision rational number in canonical form: coprime numerator
// and denominator, denominator positive. Thin value wrapper around GMP's
// mpq_class so the rest of the library sees a plain field type.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars appear everywhere
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "P", "-P" or "P/Q" with arbitrary-precision parts.
  static Rational parse(const std::string& text);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

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

  // "P" for integers, "P/Q" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

mpz_class factorial(int n);

}  // namespace hecke
