#pragma once

#include <string>
#include <vector>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Wire form of a rational function: ascending-degree coefficient arrays of
// integer strings for numerator and denominator, plus the common positive
// integer scale that clears every coefficient denominator.  The function is
// num/den; dividing both by the scale restores the monic normal form.
struct RatFuncWire {
  std::vector<std::string> num;
  std::vector<std::string> den;
  std::string scale;
};

RatFuncWire to_wire(const RatFunc& f);

}  // namespace hecke
