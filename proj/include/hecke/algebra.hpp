#pragma once

#include <map>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/permutation.hpp"
#include "hecke/rational.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

// Sparse element of the group algebra of S_n with coefficients in an exact
// field F (Rational or RatFunc).  Terms are kept in a map ordered by the
// one-line encoding, so iteration is deterministic; zero coefficients are
// never stored.
template <class F>
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int degree) : degree_(degree) {}

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement unit(int n) { return basis(Permutation::identity(n)); }
  static AlgebraElement basis(const Permutation& p, F coeff = F(Rational::one())) {
    AlgebraElement e(p.degree());
    e.add_term(p, std::move(coeff));
    return e;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const std::map<Permutation, F>& terms() const { return terms_; }

  F coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? F() : it->second;
  }

  void add_term(const Permutation& p, const F& c) {
    if (c == F()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == F()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement operator-() const {
    AlgebraElement r(degree_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
  }

  friend AlgebraElement operator*(const F& s, const AlgebraElement& x) {
    AlgebraElement r(x.degree_);
    if (s == F()) return r;
    for (const auto& [p, c] : x.terms_) r.add_term(p, s * c);
    return r;
  }

  // Bilinear convolution.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_degree(b);
    AlgebraElement r(a.degree_);
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) r.add_term(pa * pb, ca * cb);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  // sigma -> sgn(sigma) sigma, an algebra automorphism.
  AlgebraElement star() const {
    AlgebraElement r(degree_);
    for (const auto& [p, c] : terms_) {
      if (p.sign() < 0)
        r.terms_.emplace(p, -c);
      else
        r.terms_.emplace(p, c);
    }
    return r;
  }

  // g^{-1} x g.
  AlgebraElement conjugate_by(const Permutation& g) const {
    if (g.degree() != degree_) throw PreconditionError("degree mismatch in conjugation");
    Permutation ginv = g.inverse();
    AlgebraElement r(degree_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(ginv * p * g, c);
    return r;
  }

  // Natural inclusion S_n into S_m fixing n+1..m.
  AlgebraElement extended(int n) const {
    AlgebraElement r(n);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p.extended(n), c);
    return r;
  }

  // Embedding sigma_pq -> sigma_{l+p,l+q}: support moves to {l+1..l+n}.
  AlgebraElement shifted(int l) const {
    AlgebraElement r(degree_ + l);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p.shifted(l), c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_str(c) + ")[" + p.str() + "]";
    }
    return out;
  }

 private:
  static std::string coeff_str(const Rational& c) { return c.str(); }
  static std::string coeff_str(const RatFunc& c) { return c.str(); }
  void check_degree(const AlgebraElement& o) const {
    if (degree_ != o.degree_) throw PreconditionError("degree mismatch in group algebra operation");
  }
  int degree_ = 0;
  std::map<Permutation, F> terms_;
};

using RationalElement = AlgebraElement<Rational>;
using RatFuncElement = AlgebraElement<RatFunc>;

// Coefficient lift Rational -> F applied termwise.
template <class F>
AlgebraElement<F> lift(const RationalElement& x) {
  AlgebraElement<F> r(x.degree());
  for (const auto& [p, c] : x.terms()) r.add_term(p, F(c));
  return r;
}

// Termwise evaluation of RatFunc coefficients at a point.
RationalElement eval_at(const RatFuncElement& x, const Rational& point);

}  // namespace hecke
