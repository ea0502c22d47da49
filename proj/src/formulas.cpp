#include "hecke/formulas.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

RatFunc linear_ratio_product(const std::vector<std::pair<long, long>>& shifts) {
  // Product of (u + num_shift)/(u + den_shift) pairs.
  Poly num = Poly::constant(Rational::one());
  Poly den = Poly::constant(Rational::one());
  for (const auto& [ns, ds] : shifts) {
    num = num * Poly::linear(Rational(ns));
    den = den * Poly::linear(Rational(ds));
  }
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace

RatFunc theorem1_value(const Partition& lam, const Partition& mu, const IndexSequence& a) {
  ShapeResult g = build_gamma(lam, mu, a);
  if (!g.accepted())
    throw PreconditionError("row sequence rejected at position " +
                            std::to_string(g.first_violation));
  Partition conj = lam.conjugate();
  std::vector<std::pair<long, long>> shifts;
  for (const Box& box : lam.boxes()) {
    int i = box.row, j = box.col;
    int ai = a.values[i - 1];
    shifts.push_back({-conj.part(j) - mu.part(ai) + ai + j - 1, -i + j});
  }
  return linear_ratio_product(shifts);
}

RatFunc theorem2_value(const Partition& lam, const Partition& mu, const IndexSequence& b) {
  ShapeResult d = build_delta(lam, mu, b);
  if (!d.accepted())
    throw PreconditionError("column sequence rejected at position " +
                            std::to_string(d.first_violation));
  Partition mu_conj = mu.conjugate();
  std::vector<std::pair<long, long>> shifts;
  for (const Box& box : lam.boxes()) {
    int i = box.row, j = box.col;
    int bj = b.values[j - 1];
    shifts.push_back({lam.part(i) + mu_conj.part(bj) - i - bj + 1, -i + j});
  }
  return linear_ratio_product(shifts);
}

RatFunc corollary_fraction(const Partition& lam, const Partition& mu, const Box& box) {
  Partition lam_conj = lam.conjugate();
  Partition mu_conj = mu.conjugate();
  int i = box.row, j = box.col;
  return RatFunc(Poly::linear(Rational(-lam_conj.part(j) - mu.part(i) + i + j - 1)),
                 Poly::linear(Rational(lam.part(i) + mu_conj.part(j) - i - j + 1)));
}

RatFunc corollary_h(const Partition& lam, const Partition& mu) {
  RatFunc h = RatFunc::one();
  for (const Box& box : Partition::intersection(lam, mu).boxes())
    h *= corollary_fraction(lam, mu, box);
  return h;
}

RatFunc prop4_rhs(const Partition& lam, const Partition& mu) {
  Poly num = Poly::constant(Rational::one());
  Poly den = Poly::constant(Rational::one());
  for (int i = 1; i <= lam.rows(); ++i)
    for (int k = 1; k <= mu.rows(); ++k) {
      num = num * Poly::linear(Rational(lam.part(i) - i + k));
      num = num * Poly::linear(Rational(-mu.part(k) - i + k));
      den = den * Poly::linear(Rational(lam.part(i) - mu.part(k) - i + k));
      den = den * Poly::linear(Rational(-i + k));
    }
  return RatFunc(std::move(num), std::move(den));
}

Poly eq7_value(int l, const Partition& mu, const IndexSequence& a) {
  if (static_cast<int>(a.values.size()) != l)
    throw PreconditionError("sequence length must equal l for a single-column shape");
  Poly p = Poly::constant(Rational::one());
  for (int i = 1; i <= l; ++i)
    p = p * Poly::linear(Rational(mu.part(a.values[i - 1]) - a.values[i - 1] + l));
  return p;
}

RatFunc rtheta_value(const Partition& lam, int m) {
  if (lam.empty()) throw PreconditionError("r_theta needs a nonempty shape");
  if (m < 1 || m > lam.part(lam.rows()))
    throw PreconditionError("new row length must satisfy 1 <= m <= min part");
  std::vector<std::pair<long, long>> shifts;
  for (int i = 1; i <= lam.rows(); ++i)
    shifts.push_back({lam.part(i) - i + 1, lam.part(i) - m - i + 1});
  return linear_ratio_product(shifts);
}

long long hook_dimension(const Partition& lam) {
  mpz_class num = factorial(lam.size());
  mpz_class den(static_cast<long>(hook_product(lam)));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("hook quotient not integral for " + lam.str());
  if (!q.fits_slong_p())
    throw PreconditionError("dimension of " + lam.str() + " exceeds the machine range");
  return q.get_si();
}

std::vector<long> integer_roots(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("zero polynomial has no finite root set");
  Poly rest = p;
  std::vector<long> roots;
  // All polynomials reaching here are products of u + integer; scan a range
  // wide enough for any shift that can occur and insist the deflation
  // accounts for the full degree rather than assuming linearity.
  long bound = 0;
  for (const Rational& c : p.coeffs())
    bound = std::max(bound, static_cast<long>(mpz_sizeinbase(c.numerator().get_mpz_t(), 2)));
  bound = std::max<long>(64, 8 * (p.degree() + 1) + 4 * bound);
  for (long r = -bound; r <= bound && rest.degree() > 0; ++r) {
    while (rest.degree() > 0 && rest.eval(Rational(r)).is_zero()) {
      roots.push_back(r);
      rest = Poly::divmod(rest, Poly::linear(Rational(-r))).first;
    }
  }
  if (rest.degree() != 0)
    throw std::logic_error("polynomial has a non-integer factor: " + p.str());
  return roots;
}

DSet compute_dset(const Partition& lam, const Partition& mu) {
  DSet out{lam, mu, {}};
  RatFunc top = theorem1_value(lam, mu,
                               IndexSequence::identity(lam.rows(), IndexSequence::Kind::Rows));
  auto record = [&](const RatFunc& r_nu) {
    RatFunc ratio = top / r_nu;
    for (long z : integer_roots(ratio.num())) out.points.insert(z);
    for (long z : integer_roots(ratio.den())) out.points.insert(z);
  };
  for (const IndexSequence& a :
       enumerate_index_sequences(lam, mu, IndexSequence::Kind::Rows))
    record(theorem1_value(lam, mu, a));
  for (const IndexSequence& b :
       enumerate_index_sequences(lam, mu, IndexSequence::Kind::Columns))
    record(theorem2_value(lam, mu, b));
  return out;
}

}  // namespace hecke
