#include "hecke/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v < 1 || v > img_.size() || seen[v - 1])
      throw PreconditionError("one-line images must be a bijection of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int p, int q) {
  if (p < 1 || q < 1 || p > n || q > n || p == q)
    throw PreconditionError("bad transposition indices");
  Permutation t = identity(n);
  std::swap(t.img_[p - 1], t.img_[q - 1]);
  return t;
}

Permutation Permutation::tau(int l, int m) {
  if (l < 1 || m < 1) throw PreconditionError("tau needs l, m >= 1");
  std::vector<uint8_t> img(l + m);
  for (int k = 1; k <= m; ++k) img[k - 1] = static_cast<uint8_t>(l + k);
  for (int p = 1; p <= l; ++p) img[m + p - 1] = static_cast<uint8_t>(p);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<uint8_t> img;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 1 || v > 255) throw ParseError("bad image '" + tok + "'");
      img.push_back(static_cast<uint8_t>(v));
    } catch (const std::exception&) {
      throw ParseError("bad permutation '" + text + "'");
    }
  }
  try {
    return Permutation(std::move(img));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

std::string Permutation::str() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i]);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<uint8_t> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i] - 1] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& s, const Permutation& p) {
  if (s.degree() != p.degree()) throw PreconditionError("degree mismatch in composition");
  std::vector<uint8_t> img(s.img_.size());
  for (int k = 1; k <= s.degree(); ++k) img[k - 1] = static_cast<uint8_t>(s.apply(p.apply(k)));
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

int Permutation::sign() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::extended(int n) const {
  if (n < degree()) throw PreconditionError("cannot extend to a smaller degree");
  std::vector<uint8_t> img(img_);
  for (int k = degree() + 1; k <= n; ++k) img.push_back(static_cast<uint8_t>(k));
  return Permutation(std::move(img));
}

Permutation Permutation::shifted(int l) const {
  std::vector<uint8_t> img(l + degree());
  for (int k = 1; k <= l; ++k) img[k - 1] = static_cast<uint8_t>(k);
  for (int k = 1; k <= degree(); ++k) img[l + k - 1] = static_cast<uint8_t>(l + img_[k - 1]);
  return Permutation(std::move(img));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    int k = start;
    do {
      seen[k - 1] = true;
      k = apply(k);
      ++len;
    } while (k != start);
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble sort: each adjacent swap performed on the one-line vector is an
  // s_i acting on values in place; collecting them yields a word whose
  // ordered product recovers the permutation.
  std::vector<uint8_t> v(img_);
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i + 1));
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i + 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace hecke
