#pragma once

#include <type_traits>
#include <vector>

#include "hecke/representations.hpp"

namespace hecke {

// Proportionality failed during eigenvalue extraction, i.e. the component is
// not multiplicity-free (kept distinct from pole errors).
class MultiplicityError : public std::runtime_error {
 public:
  explicit MultiplicityError(const std::string& what) : std::runtime_error(what) {}
};

// The induced module W realized as the left ideal generated by
// F_Lambda F-bar_M in the group algebra of S_{l+m}, together with the data
// the intertwiner computations need.  F is Rational (evaluation at a point
// u = z - w) or RatFunc (fully symbolic in u).
//
// Only z - w is observable in the verified identities, so the x-action fixes
// z = 0 and w = -u; both sides of every identity shift equally under the
// simultaneous automorphism x_p -> x_p + const.
template <class F>
struct Realization {
  int l = 0, m = 0;
  StandardTableau Lambda, M;
  std::vector<int> c, d;          // contents of Lambda and M by label
  F u;                            // evaluation point or the indeterminate
  AlgebraElement<F> generator;        // F_Lambda F-bar_M
  AlgebraElement<F> generator_prime;  // tau^{-1} F_Lambda F-bar_M tau

  int n() const { return l + m; }
};

template <class F>
F scalar_of(const Rational& r) {
  return F(r);
}

// u + shift inside the coefficient field.
template <class F>
F shifted_u(const F& u, int shift) {
  return u + F(Rational(shift));
}

template <class F>
Realization<F> make_realization(const StandardTableau& Lambda, const StandardTableau& M,
                                const F& u) {
  Realization<F> r;
  r.l = Lambda.size();
  r.m = M.size();
  r.Lambda = Lambda;
  r.M = M;
  r.c = content_vector(Lambda);
  r.d = content_vector(M);
  r.u = u;
  if constexpr (std::is_same_v<F, Rational>) {
    // Keeps every denominator u + c_p - d_q nonzero, since |c_p - d_q| < l+m.
    if (u.is_integer() && u >= Rational(-(r.l + r.m)) && u <= Rational(r.l + r.m))
      throw PreconditionError("evaluation point " + u.str() + " is an integer in [-(l+m), l+m]");
  }
  RationalElement gen = relabeled_ideal_generator(Lambda, M);  // M on 1..m, Lambda shifted
  if (r.m == 0) {
    r.generator = r.generator_prime = lift<F>(gen);
    return r;
  }
  Permutation tau = Permutation::tau(r.l, r.m);
  // relabeled_ideal_generator returns tau^{-1} G tau; undo to get G itself.
  r.generator_prime = lift<F>(gen);
  r.generator = lift<F>(gen.conjugate_by(tau.inverse()));
  return r;
}

enum class RVariant { R, Rprime };

// The ordered binomial factors of R or R'.  Multiplying a module element by
// the factors one at a time keeps every intermediate inside the group bound,
// which is far cheaper than expanding the full product first.
template <class F>
std::vector<AlgebraElement<F>> build_R_factors(const Realization<F>& r, RVariant variant) {
  const int n = r.n();
  std::vector<AlgebraElement<F>> factors;
  factors.reserve(static_cast<size_t>(r.l) * r.m);
  auto factor = [&](int p, int q) {
    AlgebraElement<F> f = AlgebraElement<F>::unit(n);
    F denom = shifted_u(r.u, r.c[p - 1] - r.d[q - 1]);
    f.add_term(Permutation::transposition(n, p, r.l + q), -denom.inverse());
    return f;
  };
  if (variant == RVariant::R) {
    for (int p = 1; p <= r.l; ++p)
      for (int q = r.m; q >= 1; --q) factors.push_back(factor(p, q));
  } else {
    for (int p = r.l; p >= 1; --p)
      for (int q = 1; q <= r.m; ++q) factors.push_back(factor(p, q));
  }
  return factors;
}

// x * (ordered product of the factors).
template <class F>
AlgebraElement<F> multiply_right(AlgebraElement<F> x,
                                 const std::vector<AlgebraElement<F>>& factors) {
  for (const auto& f : factors) x = x * f;
  return x;
}

// (ordered product of the factors) * x.
template <class F>
AlgebraElement<F> multiply_left(const std::vector<AlgebraElement<F>>& factors,
                                AlgebraElement<F> x) {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = *it * x;
  return x;
}

// Ordered double product of the factors 1 - sigma_{p,l+q}/(u + c_p - d_q).
// R: p ascending outside, q descending inside; Rprime: p descending outside,
// q ascending inside.
template <class F>
AlgebraElement<F> build_R(const Realization<F>& r, RVariant variant) {
  return multiply_right(AlgebraElement<F>::unit(r.n()), build_R_factors(r, variant));
}

// Factors of R_{M Lambda}(w, z) in the labels of W-prime (M occupies 1..m,
// Lambda occupies m+1..m+l); the arguments swap roles, so the shifts are
// d_q - c_p - u.
template <class F>
std::vector<AlgebraElement<F>> build_R_swapped_factors(const Realization<F>& r) {
  const int n = r.n();
  std::vector<AlgebraElement<F>> factors;
  factors.reserve(static_cast<size_t>(r.l) * r.m);
  for (int q = 1; q <= r.m; ++q)
    for (int p = r.l; p >= 1; --p) {
      AlgebraElement<F> f = AlgebraElement<F>::unit(n);
      F denom = -shifted_u(r.u, r.c[p - 1] - r.d[q - 1]);
      f.add_term(Permutation::transposition(n, q, r.m + p), -denom.inverse());
      factors.push_back(f);
    }
  return factors;
}

template <class F>
AlgebraElement<F> build_R_swapped(const Realization<F>& r) {
  return multiply_right(AlgebraElement<F>::unit(r.n()), build_R_swapped_factors(r));
}

namespace detail {

// x_p applied to word-suffix * generator, recursing through the cross
// relations x_k s_k = s_k x_{k+1} - 1 and x_{k+1} s_k = s_k x_k + 1.
template <class F, class Eig>
AlgebraElement<F> apply_x_word(int p, const std::vector<int>& word, size_t pos, int n,
                               const Eig& eigenvalue_of) {
  if (pos == word.size()) {
    return eigenvalue_of(p) * AlgebraElement<F>::unit(n);
  }
  const int i = word[pos];
  int p_through = p;
  if (p == i)
    p_through = i + 1;
  else if (p == i + 1)
    p_through = i;
  AlgebraElement<F> inner = apply_x_word<F>(p_through, word, pos + 1, n, eigenvalue_of);
  AlgebraElement<F> res =
      AlgebraElement<F>::basis(Permutation::transposition(n, i, i + 1)) * inner;
  if (p == i || p == i + 1) {
    Permutation rest = Permutation::identity(n);
    for (size_t k = pos + 1; k < word.size(); ++k)
      rest = rest * Permutation::transposition(n, word[k], word[k] + 1);
    AlgebraElement<F> tail = AlgebraElement<F>::basis(rest);
    if (p == i)
      res -= tail;
    else
      res += tail;
  }
  return res;
}

}  // namespace detail

// Action of the commuting generator x_p on an ideal element given by its
// left coefficient A (the element is A * generator): returns B with
// x_p (A generator) = B generator.  With primed = true the element lives in
// W-prime and the eigenvalue rules (5)-(6) apply instead of (3).
template <class F>
AlgebraElement<F> apply_x(int p, const AlgebraElement<F>& A, const Realization<F>& r,
                          bool primed = false) {
  const int n = r.n();
  if (p < 1 || p > n) throw PreconditionError("x index out of range");
  auto eig = [&](int j) -> F {
    if (!primed) {
      if (j <= r.l) return scalar_of<F>(Rational(r.c[j - 1]));          // c_j + z, z = 0
      return scalar_of<F>(Rational(r.d[j - r.l - 1])) - r.u;            // d_q + w, w = -u
    }
    if (j <= r.m) return scalar_of<F>(Rational(r.d[j - 1])) - r.u;
    return scalar_of<F>(Rational(r.c[j - r.m - 1]));
  };
  AlgebraElement<F> out(n);
  for (const auto& [perm, coeff] : A.terms()) {
    std::vector<int> word = perm.adjacent_word();
    out += coeff * detail::apply_x_word<F>(p, word, 0, n, eig);
  }
  return out;
}

// Right multiplication by R restricted to W (stays in W by the exchange
// relation); input and output are raw group algebra elements.
template <class F>
AlgebraElement<F> operator_J(const AlgebraElement<F>& elem, const Realization<F>& r) {
  return elem * build_R(r, RVariant::R);
}

template <class F>
struct EigenvalueResult {
  F value;
  Permutation witness;  // term position used for the division
};

namespace detail {

template <class F>
EigenvalueResult<F> extract_ratio(const AlgebraElement<F>& A, const AlgebraElement<F>& B,
                                  const std::string& label) {
  if (A.is_zero())
    throw MultiplicityError(label + ": projection is zero (component absent)");
  const auto& [witness, coeff] = *A.terms().begin();
  F r = B.coeff(witness) / coeff;
  if (!(B == r * A))
    throw MultiplicityError(label + ": action is not scalar (multiplicity exceeds one)");
  return {r, witness};
}

}  // namespace detail

// Projection Z_nu generator of the ideal onto its nu-isotypic part (the
// vector J is applied to during extraction).
template <class F>
AlgebraElement<F> isotypic_projection(const Partition& nu, const Realization<F>& r,
                                      bool primed = false) {
  return lift<F>(central_idempotent(nu, r.n())) * (primed ? r.generator_prime : r.generator);
}

// Extraction given a precomputed projection (shared across evaluation
// points, since the projection does not depend on u).
template <class F>
EigenvalueResult<F> eigenvalue_from(const AlgebraElement<F>& projection,
                                    const Realization<F>& r) {
  return detail::extract_ratio(
      projection, multiply_right(projection, build_R_factors(r, RVariant::R)), "eigenvalue");
}

template <class F>
EigenvalueResult<F> eigenvalue_prime_from(const AlgebraElement<F>& projection,
                                          const Realization<F>& r) {
  return detail::extract_ratio(
      projection, multiply_right(projection, build_R_swapped_factors(r)), "eigenvalue_prime");
}

// Eigenvalue of J on the nu-isotypic component: computes A = Z_nu G and
// B = A R, divides at a nonzero coefficient of A and verifies the
// proportionality on every term.
template <class F>
EigenvalueResult<F> eigenvalue(const Partition& nu, const Realization<F>& r) {
  return eigenvalue_from(isotypic_projection(nu, r), r);
}

// Eigenvalue of J' on W-prime, extracted with the swapped-role product.
template <class F>
EigenvalueResult<F> eigenvalue_prime(const Partition& nu, const Realization<F>& r) {
  return eigenvalue_prime_from(isotypic_projection(nu, r, /*primed=*/true), r);
}

// F_Lambda F-bar_M R = R' F_Lambda F-bar_M.
template <class F>
bool check_eq4(const Realization<F>& r) {
  return multiply_right(r.generator, build_R_factors(r, RVariant::R)) ==
         multiply_left(build_R_factors(r, RVariant::Rprime), r.generator);
}

// x_p I(generator) = I(x_p generator) for every p, with I the right
// multiplication by R tau.
template <class F>
bool check_prop3(const Realization<F>& r) {
  const int n = r.n();
  AlgebraElement<F> tau_elem = AlgebraElement<F>::basis(Permutation::tau(r.l, r.m));
  AlgebraElement<F> image_coeff = build_R(r, RVariant::Rprime) * tau_elem;  // I(gen) = (R' tau) gen'
  AlgebraElement<F> image_raw =
      multiply_right(r.generator, build_R_factors(r, RVariant::R)) * tau_elem;
  for (int p = 1; p <= n; ++p) {
    AlgebraElement<F> lhs = apply_x(p, image_coeff, r, /*primed=*/true) * r.generator_prime;
    F eig = apply_x(p, AlgebraElement<F>::unit(n), r, /*primed=*/false).coeff(
        Permutation::identity(n));
    AlgebraElement<F> rhs = eig * image_raw;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

struct Prop4Elements {
  bool is_scalar = false;        // composed element is a multiple of the identity
  bool matches_product = false;  // the scalar equals prod (1 - (u+c_p-d_q)^{-2})
};

// The composed element R_{Lambda M}(z,w) tau R_{M Lambda}(w,z) tau^{-1} must
// be the stated scalar multiple of the identity.
template <class F>
Prop4Elements check_prop4_scalar(const Realization<F>& r, F* scalar_out = nullptr) {
  const int n = r.n();
  Permutation tau = Permutation::tau(r.l, r.m);
  AlgebraElement<F> composed = build_R(r, RVariant::R);
  for (const AlgebraElement<F>& f : build_R_swapped_factors(r))
    composed = composed * f.conjugate_by(tau.inverse());
  F expected = scalar_of<F>(Rational::one());
  for (int p = 1; p <= r.l; ++p)
    for (int q = 1; q <= r.m; ++q) {
      F denom = shifted_u(r.u, r.c[p - 1] - r.d[q - 1]);
      expected *= scalar_of<F>(Rational::one()) - (denom * denom).inverse();
    }
  Prop4Elements out;
  F id_coeff = composed.coeff(Permutation::identity(n));
  out.is_scalar = (composed == id_coeff * AlgebraElement<F>::unit(n));
  out.matches_product = out.is_scalar && id_coeff == expected;
  if (scalar_out) *scalar_out = id_coeff;
  return out;
}

}  // namespace hecke
