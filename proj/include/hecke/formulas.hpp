#pragma once

#include <set>

#include "hecke/partition.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

// Closed forms for the intertwiner eigenvalues and their consequences, all
// as normalized rational functions of u = z - w.

// Product over the boxes (i,j) of lam of
//   (u - lam'_j - mu_{a_i} + a_i + j - 1) / (u - i + j);
// requires the row sequence to be accepted by the gamma construction.
RatFunc theorem1_value(const Partition& lam, const Partition& mu, const IndexSequence& a);

// Product over the boxes (i,j) of lam of
//   (u + lam_i + mu'_{b_j} - i - b_j + 1) / (u - i + j);
// requires the column sequence to be accepted by the delta construction.
RatFunc theorem2_value(const Partition& lam, const Partition& mu, const IndexSequence& b);

// Eigenvalue ratio of the maximal and minimal components: product over the
// intersection boxes of (u - lam'_j - mu_i + i + j - 1)/(u + lam_i + mu'_j - i - j + 1),
// i.e. mixed hooks of the second kind over mixed hooks of the first kind.
RatFunc corollary_h(const Partition& lam, const Partition& mu);

// Product over i <= lam'_1, k <= mu'_1 of
//   (u + lam_i - i + k)(u - mu_k - i + k) / ((u + lam_i - mu_k - i + k)(u - i + k)).
RatFunc prop4_rhs(const Partition& lam, const Partition& mu);

// Single-column case: product over i = 1..l of (u + mu_{a_i} - a_i + l).
Poly eq7_value(int l, const Partition& mu, const IndexSequence& a);

// Product over i <= lam'_1 of (u + lam_i - i + 1)/(u + lam_i - m - i + 1);
// requires m <= every part of lam.
RatFunc rtheta_value(const Partition& lam, int m);

// l!/h_lam; throws if the quotient were not integral (it never is not).
long long hook_dimension(const Partition& lam);

// The single fraction whose product over the boxes of lam gives the ratio of
// the two distinguished eigenvalues.
RatFunc corollary_fraction(const Partition& lam, const Partition& mu, const Box& box);

// Integer zeros and poles of r_{lam+mu}/r_nu over all accepted gamma- and
// delta-components.
struct DSet {
  Partition lam, mu;
  std::set<long> points;
};
DSet compute_dset(const Partition& lam, const Partition& mu);

// Integer roots of a polynomial whose irreducible factors are all linear
// with integer roots; asserts that nothing else divides it.
std::vector<long> integer_roots(const Poly& p);

}  // namespace hecke
