#include "hecke/algebra.hpp"

namespace hecke {

RationalElement eval_at(const RatFuncElement& x, const Rational& point) {
  RationalElement out(x.degree());
  for (const auto& [p, c] : x.terms()) out.add_term(p, c.eval(point));
  return out;
}

}  // namespace hecke
