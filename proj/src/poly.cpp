#include "hecke/poly.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

Poly Poly::constant(const Rational& a) {
  if (a.is_zero()) return Poly();
  return Poly(std::vector<Rational>{a});
}

Poly Poly::linear(const Rational& shift) {
  return Poly(std::vector<Rational>{shift, Rational::one()});
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  std::vector<Rational> r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem = num.c_;
  int dd = den.degree();
  if (num.degree() < dd) return {Poly(), num};
  std::vector<Rational> quot(num.degree() - dd + 1);
  Rational lead_inv = den.leading().inverse();
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational q = rem[k + dd] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= q * den.c_[i];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return leading().inverse() * *this;
}

Poly Poly::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw PreconditionError("duplicate abscissa " + points[i].first.str());
  Poly result;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(Rational::one());
    Rational denom = Rational::one();
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly::linear(-points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result = result + (points[i].second / denom) * basis;
  }
  return result;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    std::string mag = (a.sign() < 0 ? (-a).str() : a.str());
    if (out.empty()) {
      out += (a.sign() < 0 ? "-" : "");
    } else {
      out += (a.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += (k == 1 ? "u" : "u^" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace hecke
