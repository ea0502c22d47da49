#include "doctest.h"
#include "hecke/fusion.hpp"
#include "hecke/representations.hpp"

using namespace hecke;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("f factors") {
  RatFuncElement f = f_factor(2, 1, 2, 0);
  CHECK(f.coeff(Permutation::identity(2)) == RatFunc::one());
  CHECK(f.coeff(Permutation::transposition(2, 1, 2)) == -RatFunc::linear(Rational(0)).inverse());

  // Shift -1 evaluated at t = 0 gives 1 + sigma.
  RationalElement at0 = eval_at(f_factor(2, 1, 2, -1), Rational(0));
  CHECK(at0.coeff(Permutation::transposition(2, 1, 2)) == Rational(1));
}

TEST_CASE("the unitarity identity as rational functions in one variable") {
  // f_12(t,0) f_21(0,t) = 1 - t^{-2}, where f_21(0,t) = 1 + sigma/t.
  RatFuncElement f21 = RatFuncElement::unit(2);
  f21.add_term(Permutation::transposition(2, 1, 2),
               RatFunc::linear(Rational(0)).inverse());
  RatFuncElement lhs = f_factor(2, 1, 2, 0) * f21;
  RatFunc expected = RatFunc::one() - (RatFunc::linear(Rational(0)) *
                                       RatFunc::linear(Rational(0))).inverse();
  CHECK(lhs.coeff(Permutation::identity(2)) == expected);
  CHECK(lhs.coeff(Permutation::transposition(2, 1, 2)) == RatFunc::zero());
}

TEST_CASE("Yang-Baxter and unitarity at sample points") {
  CHECK(check_yang_baxter_at(Rational(5), Rational(1, 2), Rational(-3)));
  // u - v = 1: the scalar side is literally 1 - 1 = 0 times the identity.
  CHECK(check_yang_baxter_at(Rational(2), Rational(1), Rational(7)));
  // Relabeling invariance amounts to checking another permuted triple.
  CHECK(check_yang_baxter_at(Rational(-3), Rational(5), Rational(1, 2)));
  CHECK_THROWS_AS(check_yang_baxter_at(Rational(1), Rational(1), Rational(2)),
                  PreconditionError);
}

TEST_CASE("fused products at the origin reproduce the matrix elements") {
  // One row of two boxes: on the row subspace the factor is constant 1 + sigma.
  FusedResult row2 = fused_F(StandardTableau::parse("1,2"));
  CHECK(row2.value == matrix_element_F(StandardTableau::parse("1,2")));

  FusedResult col2 = fused_F(StandardTableau::parse("1/2"));
  CHECK(col2.value == matrix_element_F(StandardTableau::parse("1/2")));

  FusedResult hook = fused_F(column_tableau(P("2,1")));
  CHECK(hook.value == matrix_element_F(column_tableau(P("2,1"))));
}

TEST_CASE("fusion agrees with the diagonal matrix elements up to l = 4") {
  for (int l = 1; l <= 4; ++l)
    for (const Partition& lam : Partition::all(l))
      for (const StandardTableau& t : enumerate_standard(lam)) {
        CAPTURE(t.str());
        CHECK(fused_F(t).value == matrix_element_F(t));
      }
}
