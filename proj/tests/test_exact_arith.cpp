#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/interpolate.hpp"
#include "hecke/poly.hpp"
#include "hecke/ratfunc.hpp"
#include "test_util.hpp"

using namespace hecke;

namespace {
RatFunc u_plus(long k) { return RatFunc::linear(Rational(k)); }
}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).denominator() == 2);  // denominator stays positive
  CHECK(Rational::parse("120/891") == Rational(40, 297));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(), PreconditionError);
}

TEST_CASE("ratfunc arithmetic on the worked examples") {
  // (u-1)/u * (u+1)/u = (u^2-1)/u^2
  RatFunc a = u_plus(-1) / u_plus(0);
  RatFunc b = u_plus(1) / u_plus(0);
  RatFunc prod = a * b;
  CHECK(prod.num() == Poly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(prod.den() == Poly({Rational(0), Rational(0), Rational(1)}));

  // x + 0 = x
  CHECK(a + RatFunc::zero() == a);

  // 1/(u-1) + 1/(u+1) = 2u/(u^2-1), cross-multiplied by hand
  RatFunc sum = u_plus(-1).inverse() + u_plus(1).inverse();
  CHECK(sum == RatFunc(Poly({Rational(0), Rational(2)}),
                       Poly({Rational(-1), Rational(0), Rational(1)})));

  CHECK_THROWS_AS(a / RatFunc::zero(), PreconditionError);
}

TEST_CASE("ratfunc evaluation") {
  RatFunc f = u_plus(-1) / u_plus(0);
  CHECK(f.eval(Rational(2)) == Rational(1, 2));

  // (u^2-1)/(u-1) is stored as u+1 by normal form cancellation.
  RatFunc g(Poly({Rational(-1), Rational(0), Rational(1)}), Poly({Rational(-1), Rational(1)}));
  CHECK(g == u_plus(1));
  CHECK(g.eval(Rational(1)) == Rational(2));
  CHECK_THROWS_AS(f.eval(Rational(0)), PoleError);

  // (u-3)(u-2)(u-1)/((u+4)(u+2)^2) at u = 7, substituted by hand
  RatFunc h = (u_plus(-3) * u_plus(-2) * u_plus(-1)) / (u_plus(4) * u_plus(2) * u_plus(2));
  CHECK(h.eval(Rational(7)) == Rational(40, 297));
}

TEST_CASE("polynomial interpolation") {
  using P = std::pair<Rational, Rational>;
  CHECK(Poly::interpolate({P{Rational(0), Rational(1)}, P{Rational(1), Rational(1)}}) ==
        Poly({Rational(1)}));
  CHECK(Poly::interpolate({P{Rational(0), Rational(0)}, P{Rational(1), Rational(1)},
                           P{Rational(2), Rational(4)}}) ==
        Poly({Rational(0), Rational(0), Rational(1)}));
  // Forced by solving the 3x3 Vandermonde system by hand: u^2 + 1.
  CHECK(Poly::interpolate({P{Rational(1), Rational(2)}, P{Rational(2), Rational(5)},
                           P{Rational(3), Rational(10)}}) ==
        Poly({Rational(1), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(
      Poly::interpolate({P{Rational(1), Rational(2)}, P{Rational(1), Rational(3)}}),
      PreconditionError);
}

TEST_CASE("field axioms hold exactly on random samples") {
  testutil::Rng rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    RatFunc x = testutil::random_ratfunc(rng, 4);
    RatFunc y = testutil::random_ratfunc(rng, 4);
    RatFunc z = testutil::random_ratfunc(rng, 4);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == RatFunc::one());
  }
}

TEST_CASE("normal form is unique across construction routes") {
  testutil::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly n = testutil::random_poly(rng, 3);
    Poly d = testutil::random_poly(rng, 3);
    if (d.is_zero()) continue;
    Poly junk = testutil::random_poly(rng, 2);
    if (junk.is_zero()) continue;
    RatFunc direct(n, d);
    RatFunc inflated(n * junk, d * junk);
    CHECK(direct.num() == inflated.num());
    CHECK(direct.den() == inflated.den());
  }
}

TEST_CASE("evaluation commutes with arithmetic away from poles") {
  testutil::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    RatFunc x = testutil::random_ratfunc(rng, 3);
    RatFunc y = testutil::random_ratfunc(rng, 3);
    Rational pt = testutil::random_rational(rng);
    if (x.den().eval(pt).is_zero() || y.den().eval(pt).is_zero()) continue;
    CHECK((x * y).eval(pt) == x.eval(pt) * y.eval(pt));
    CHECK((x + y).eval(pt) == x.eval(pt) + y.eval(pt));
  }
}

TEST_CASE("rational function recovery from samples") {
  RatFunc f = (u_plus(-3) * u_plus(5)) / (u_plus(1) * u_plus(2));
  std::vector<std::pair<Rational, Rational>> samples;
  for (long k = 3; samples.size() < 5; ++k) samples.emplace_back(Rational(k), f.eval(Rational(k)));
  CHECK(ratfunc_interpolate(samples, 2) == f);
  // A polynomial is recovered too.
  RatFunc p(Poly({Rational(1), Rational(0), Rational(1)}));
  samples.clear();
  for (long k = 0; samples.size() < 5; ++k) samples.emplace_back(Rational(k), p.eval(Rational(k)));
  CHECK(ratfunc_interpolate(samples, 2) == p);
}
