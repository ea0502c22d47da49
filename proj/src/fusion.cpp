#include "hecke/fusion.hpp"

#include "hecke/errors.hpp"

namespace hecke {

RatFuncElement f_factor(int n, int p, int q, int shift) {
  if (p == q) throw PreconditionError("f factor needs distinct indices");
  RatFuncElement e = RatFuncElement::unit(n);
  RatFunc denom = RatFunc::linear(Rational(shift));
  e.add_term(Permutation::transposition(n, p, q), -denom.inverse());
  return e;
}

namespace {

// One attempt with the given per-row slopes.
RatFuncElement fused_product(const StandardTableau& Lambda, const std::vector<Rational>& slope) {
  const int l = Lambda.size();
  std::vector<int> c = content_vector(Lambda);
  RatFuncElement prod = RatFuncElement::unit(l);
  for (int p = 1; p <= l; ++p) {
    for (int q = p + 1; q <= l; ++q) {
      // Argument difference (z_p + c_p) - (z_q + c_q) on the line
      // z_r = slope(row r) * eps.
      Rational ds = slope[Lambda.box_of(p).row - 1] - slope[Lambda.box_of(q).row - 1];
      Poly denom({Rational(c[p - 1] - c[q - 1]), ds});
      RatFuncElement factor = RatFuncElement::unit(l);
      factor.add_term(Permutation::transposition(l, p, q), -RatFunc(denom).inverse());
      prod = prod * factor;
    }
  }
  return prod;
}

bool regular_at_origin(const RatFuncElement& e) {
  for (const auto& [p, c] : e.terms())
    if (c.den().eval(Rational::zero()).is_zero()) return false;
  return true;
}

RationalElement value_at_origin(const RatFuncElement& e) {
  RationalElement out(e.degree());
  for (const auto& [p, c] : e.terms()) out.add_term(p, c.eval(Rational::zero()));
  return out;
}

}  // namespace

FusedResult fused_F(const StandardTableau& Lambda) {
  const int rows = Lambda.shape().rows();
  std::vector<Rational> slope(rows);
  for (int i = 0; i < rows; ++i) slope[i] = Rational(i + 1);

  RatFuncElement prod = fused_product(Lambda, slope);
  FusedResult result;
  if (!regular_at_origin(prod)) {
    // Retry once along a steeper generic line before declaring failure.
    result.retried = true;
    Rational k = Rational::one();
    for (int i = 0; i < rows; ++i) {
      slope[i] = k;
      k *= Rational(257);
    }
    prod = fused_product(Lambda, slope);
    if (!regular_at_origin(prod))
      throw PoleError("fused product singular at the origin", "0");
  }
  result.value = value_at_origin(prod);
  return result;
}

bool check_yang_baxter_at(const Rational& u, const Rational& v, const Rational& w) {
  if (u == v || u == w || v == w) throw PreconditionError("triple must be pairwise distinct");
  const int n = 3;
  auto f = [&](int p, int q, const Rational& x, const Rational& y) {
    RationalElement e = RationalElement::unit(n);
    e.add_term(Permutation::transposition(n, p, q), -(x - y).inverse());
    return e;
  };
  RationalElement lhs = f(1, 2, u, v) * f(1, 3, u, w) * f(2, 3, v, w);
  RationalElement rhs = f(2, 3, v, w) * f(1, 3, u, w) * f(1, 2, u, v);
  if (lhs != rhs) return false;

  RationalElement inv = f(1, 2, u, v) * f(2, 1, v, u);
  Rational d = u - v;
  RationalElement expected = (Rational::one() - (d * d).inverse()) * RationalElement::unit(n);
  return inv == expected;
}

}  // namespace hecke
