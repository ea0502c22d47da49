#include "hecke/serialize.hpp"

namespace hecke {

RatFuncWire to_wire(const RatFunc& f) {
  mpz_class scale = 1;
  for (const Rational& c : f.num().coeffs()) scale = lcm(scale, c.denominator());
  for (const Rational& c : f.den().coeffs()) scale = lcm(scale, c.denominator());
  RatFuncWire wire;
  auto emit = [&](const Poly& p, std::vector<std::string>& out) {
    for (const Rational& c : p.coeffs()) {
      mpz_class v = c.numerator() * (scale / c.denominator());
      out.push_back(v.get_str());
    }
  };
  emit(f.num(), wire.num);
  emit(f.den(), wire.den);
  wire.scale = scale.get_str();
  return wire;
}

}  // namespace hecke
