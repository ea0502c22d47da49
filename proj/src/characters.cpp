#include <algorithm>
#include <map>
#include <mutex>

#include "hecke/representations.hpp"

namespace hecke {

namespace {

// Murnaghan-Nakayama on the abacus: beta-numbers beta_i = lam_i + (k - i)
// for a fixed bead count k.  Removing a border strip of length t moves one
// bead from beta down to beta - t; the height of the strip is the number of
// beads passed over.
long long mn_recurse(std::vector<int> beta, std::vector<int> rho,
                     std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (rho.empty()) return 1;
  auto key = std::make_pair(beta, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int t = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - t;
    if (target < 0) continue;
    bool occupied = false;
    int passed = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++passed;
    }
    if (occupied) continue;
    std::vector<int> next(beta);
    next[i] = target;
    std::sort(next.rbegin(), next.rend());
    long long sub = mn_recurse(std::move(next), rest, memo);
    total += (passed % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long character(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size())
    throw PreconditionError("character needs |shape| = |cycle type|");
  int k = shape.rows();
  std::vector<int> beta(k);
  for (int i = 1; i <= k; ++i) beta[i - 1] = shape.part(i) + (k - i);
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  std::lock_guard<std::mutex> lock(mu);
  return mn_recurse(std::move(beta), cycle_type.parts(), memo);
}

RationalElement central_idempotent(const Partition& nu, int n) {
  if (nu.size() != n) throw PreconditionError("central idempotent needs |nu| = n");
  static std::mutex cache_mu;
  static std::map<std::pair<Partition, int>, RationalElement> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({nu, n});
    if (it != cache.end()) return it->second;
  }
  long long d = character(nu, Partition(std::vector<int>(n, 1)));
  Rational scale = Rational(d) / Rational(mpz_class(factorial(n)));
  RationalElement z(n);
  std::map<std::vector<int>, long long> by_type;
  for (const Permutation& s : all_permutations(n)) {
    std::vector<int> type = s.cycle_type();
    auto it = by_type.find(type);
    long long chi;
    if (it == by_type.end()) {
      chi = character(nu, Partition(type));
      by_type.emplace(type, chi);
    } else {
      chi = it->second;
    }
    if (chi != 0) z.add_term(s, scale * Rational(chi));
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::make_pair(nu, n), std::move(z)).first->second;
}

}  // namespace hecke
