#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Permutation of {1..n} in one-line notation.  Composition acts right factor
// first: (s*p)(k) = s(p(k)); this convention is fixed project-wide (the
// intertwiner relations are sensitive to it and pin it by test).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint8_t> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int p, int q);
  // (1,...,m,m+1,...,m+l) -> (l+1,...,l+m,1,...,l): position k <= m goes to
  // l+k and position m+p goes to p.
  static Permutation tau(int l, int m);

  static Permutation parse(const std::string& text);  // "3,1,2"
  std::string str() const;

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int k) const { return img_[k - 1]; }
  int operator()(int k) const { return img_[k - 1]; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& s, const Permutation& p);

  bool is_identity() const;
  int sign() const;

  // Extends to degree n by fixing the new points.
  Permutation extended(int n) const;
  // Conjugates the support into {l+1..l+n}: k maps into l+image.
  Permutation shifted(int l) const;

  std::vector<int> cycle_type() const;  // partition of n as a sorted-desc vector

  // Word in adjacent transpositions s_i = (i,i+1) whose ordered product
  // (left to right under the composition convention) equals *this.
  std::vector<int> adjacent_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint8_t> img_;
};

// All n! permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace hecke
