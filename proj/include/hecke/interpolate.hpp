#pragma once

#include <utility>
#include <vector>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Recovers a rational function with numerator and denominator degrees at
// most max_degree from exact point samples (Cauchy interpolation).  Needs at
// least 2*max_degree + 1 samples with distinct abscissae; the result is
// verified against every sample and a PreconditionError is thrown if no
// rational function of the stated degree fits.
RatFunc ratfunc_interpolate(const std::vector<std::pair<Rational, Rational>>& samples,
                            int max_degree);

}  // namespace hecke
