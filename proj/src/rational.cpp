#include "hecke/rational.hpp"

#include "hecke/errors.hpp"

namespace hecke {

Rational::Rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  v_ = mpq_class(num, den);
  canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  try {
    mpq_class v(text);
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

}  // namespace hecke
