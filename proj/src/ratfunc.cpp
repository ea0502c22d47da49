#include "hecke/ratfunc.hpp"

#include "hecke/errors.hpp"

namespace hecke {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational::one());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of the zero function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw PoleError("pole", point.str());
  return num_.eval(point) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
  if (den_ == Poly::constant(Rational::one())) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hecke
