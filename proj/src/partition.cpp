#include "hecke/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw PreconditionError("partition parts must be weakly decreasing");
  }
  for (int p : parts_) size_ += p;
}

Partition Partition::parse(const std::string& text) {
  if (text.empty()) return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw ParseError("bad partition part '" + tok + "'");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad partition '" + text + "'");
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + ": '" + text + "'");
  }
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0], 0);
  for (int j = 1; j <= parts_[0]; ++j)
    conj[j - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                 [j](int p) { return p >= j; }));
  return Partition(std::move(conj));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.rows(), b.rows()));
  for (int i = 1; i <= static_cast<int>(parts.size()); ++i) parts[i - 1] = a.part(i) + b.part(i);
  return Partition(std::move(parts));
}

Partition Partition::intersection(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  for (int i = 1; i <= std::min(a.rows(), b.rows()); ++i) {
    int v = std::min(a.part(i), b.part(i));
    if (v == 0) break;
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

int hook_length(const Partition& p, const Box& b) {
  if (!p.contains(b)) throw PreconditionError("box outside diagram");
  Partition conj = p.conjugate();
  return p.part(b.row) + conj.part(b.col) - b.row - b.col + 1;
}

long long hook_product(const Partition& p) {
  mpz_class prod = 1;
  Partition conj = p.conjugate();
  for (const Box& b : p.boxes()) {
    int h = p.part(b.row) + conj.part(b.col) - b.row - b.col + 1;
    assert(h > 0);
    prod *= h;
  }
  if (!prod.fits_slong_p())
    throw PreconditionError("hook product of " + p.str() + " exceeds the machine range");
  return prod.get_si();
}

int mixed_hook(const Partition& lam, const Partition& mu, const Box& b, MixedHookKind kind) {
  if (!lam.contains(b) || !mu.contains(b))
    throw PreconditionError("box outside the intersection of the two diagrams");
  int v = 0;
  if (kind == MixedHookKind::First) {
    v = lam.part(b.row) + mu.conjugate().part(b.col) - b.row - b.col + 1;
  } else {
    v = lam.conjugate().part(b.col) + mu.part(b.row) - b.row - b.col + 1;
  }
  assert(v > 0);
  return v;
}

SkewShape skew_complement(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.part(i) > outer.part(i))
      throw PreconditionError("inner diagram not contained in outer");
  SkewShape s{outer, inner, {}};
  for (int i = 1; i <= outer.rows(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) s.boxes.push_back({i, j});
  return s;
}

IndexSequence IndexSequence::identity(int n, Kind kind) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return {std::move(v), kind};
}

std::string IndexSequence::str() const {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

void check_sequence(const IndexSequence& s, IndexSequence::Kind kind, int expected_len) {
  if (s.kind != kind) throw PreconditionError("index sequence of the wrong kind");
  if (static_cast<int>(s.values.size()) != expected_len)
    throw PreconditionError("index sequence must have length " + std::to_string(expected_len));
  for (size_t i = 0; i < s.values.size(); ++i) {
    if (s.values[i] < 1) throw PreconditionError("index sequence values must be positive");
    for (size_t j = i + 1; j < s.values.size(); ++j)
      if (s.values[i] == s.values[j])
        throw PreconditionError("index sequence values must be pairwise distinct");
  }
}

// Validates weak decrease of a fully assembled candidate; returns the first
// 1-based violating position, or 0.
int first_violation(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return static_cast<int>(i) + 2;
  return 0;
}

ShapeResult build_by_addition(const std::vector<int>& base, const std::vector<int>& added,
                              const std::vector<int>& positions) {
  int len = static_cast<int>(base.size());
  for (int p : positions) len = std::max(len, p);
  std::vector<int> v(len, 0);
  for (size_t i = 0; i < base.size(); ++i) v[i] = base[i];
  for (size_t i = 0; i < positions.size(); ++i) v[positions[i] - 1] += added[i];
  if (int bad = first_violation(v); bad != 0) return {std::nullopt, bad};
  return {Partition(v), 0};
}

}  // namespace

ShapeResult build_gamma(const Partition& lam, const Partition& mu, const IndexSequence& a) {
  check_sequence(a, IndexSequence::Kind::Rows, lam.rows());
  return build_by_addition(mu.parts(), lam.parts(), a.values);
}

ShapeResult build_delta(const Partition& lam, const Partition& mu, const IndexSequence& b) {
  check_sequence(b, IndexSequence::Kind::Columns, lam.part(1));
  ShapeResult conj = build_by_addition(mu.conjugate().parts(), lam.conjugate().parts(), b.values);
  if (!conj.accepted()) return conj;
  return {conj.shape->conjugate(), 0};
}

std::vector<IndexSequence> enumerate_index_sequences(const Partition& lam, const Partition& mu,
                                                     IndexSequence::Kind kind) {
  bool rows = (kind == IndexSequence::Kind::Rows);
  const std::vector<int> base = rows ? mu.parts() : mu.conjugate().parts();
  const std::vector<int> added = rows ? lam.parts() : lam.conjugate().parts();
  const int k = static_cast<int>(added.size());
  const int bound = (rows ? mu.rows() + lam.rows() : mu.part(1) + lam.part(1));

  // Walk candidate positions left to right, either keeping the base value or
  // placing one of the not-yet-used added parts; weak decrease is checked
  // incrementally, which prunes almost the entire search tree.
  std::vector<IndexSequence> out;
  std::vector<int> pos_of(k, 0);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, int p, int prev, int remaining) -> void {
    if (p > bound) {
      if (remaining == 0) {
        std::vector<int> vals(pos_of);
        out.push_back({std::move(vals), kind});
      }
      return;
    }
    if (bound - p + 1 < remaining) return;  // not enough positions left
    int base_v = p <= static_cast<int>(base.size()) ? base[p - 1] : 0;
    if (base_v <= prev) self(self, p + 1, base_v, remaining);
    for (int i = 0; i < k; ++i) {
      if (used[i]) continue;
      int v = base_v + added[i];
      if (v > prev) continue;
      used[i] = true;
      pos_of[i] = p;
      self(self, p + 1, v, remaining - 1);
      used[i] = false;
    }
  };
  rec(rec, 1, std::max(bound, 1) * 2 + mu.size() + lam.size(), k);

  std::sort(out.begin(), out.end(),
            [](const IndexSequence& x, const IndexSequence& y) { return x.values < y.values; });
  return out;
}

}  // namespace hecke
