#pragma once

#include "hecke/algebra.hpp"
#include "hecke/tableau.hpp"

namespace hecke {

// 1 - sigma_pq / (t + shift) over RatFunc coefficients, t the indeterminate.
RatFuncElement f_factor(int n, int p, int q, int shift);

// Ordered product of the f-factors over the lexicographic pairs (p,q) of the
// tableau, restricted to the subspace where z_p = z_q for labels sharing a
// row.  The restriction substitutes z_p = slope(row of p) * eps for a fresh
// indeterminate eps; any assignment of pairwise distinct row slopes keeps
// the needed genericity, and the product must be regular at eps = 0.
struct FusedResult {
  RationalElement value;      // value at eps = 0
  bool retried = false;       // first slope assignment hit a pole at 0
};

// Computes the ordered product and evaluates it at the origin; throws
// PoleError if the product is singular there even after a slope retry
// (which would falsify the regularity claim the construction rests on).
FusedResult fused_F(const StandardTableau& Lambda);

// Both f-relations at one rational triple with pairwise distinct entries:
//   f_pq(u,v) f_pr(u,w) f_qr(v,w) = f_qr(v,w) f_pr(u,w) f_pq(u,v)
//   f_pq(u,v) f_qp(v,u) = 1 - (u-v)^{-2}
bool check_yang_baxter_at(const Rational& u, const Rational& v, const Rational& w);

}  // namespace hecke
