#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Box of a Young diagram, 1-based row and column.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(const Box& a, const Box& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Content of a box: column minus row.
inline int content(const Box& b) { return b.col - b.row; }

// Weakly decreasing sequence of positive integers; trailing zeros are never
// stored.  Immutable value type with structural equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Comma-separated syntax "3,2"; the empty string is the empty partition.
  static Partition parse(const std::string& text);
  std::string str() const;

  int size() const { return size_; }                              // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }    // lambda'_1
  int part(int i) const {                                          // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= part(b.row); }
  std::vector<Box> boxes() const;  // row-reading order

  // Componentwise operations used by the distinguished components.
  friend Partition operator+(const Partition& a, const Partition& b);
  static Partition intersection(const Partition& a, const Partition& b);  // min(a,b)

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  // All partitions of n in descending lexicographic order; n = 0 gives the
  // empty partition.
  static std::vector<Partition> all(int n);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Hook length of a box inside p: p_i + p'_j - i - j + 1.
int hook_length(const Partition& p, const Box& b);
// Product of all hook lengths; 1 for the empty partition.
long long hook_product(const Partition& p);

enum class MixedHookKind { First, Second };
// First kind: lam_i + mu'_j - i - j + 1; second kind: lam'_j + mu_i - i - j + 1.
// The box must lie in the intersection diagram; both kinds are positive there.
int mixed_hook(const Partition& lam, const Partition& mu, const Box& b, MixedHookKind kind);

// Skew difference outer \ inner (inner must be contained in outer).
struct SkewShape {
  Partition outer;
  Partition inner;
  std::vector<Box> boxes;
};
SkewShape skew_complement(const Partition& outer, const Partition& inner);

// Pairwise-distinct positive indices; rows kind has length lam'_1, columns
// kind has length lam_1.
struct IndexSequence {
  enum class Kind { Rows, Columns };
  std::vector<int> values;
  Kind kind = Kind::Rows;

  static IndexSequence rows(std::vector<int> v) { return {std::move(v), Kind::Rows}; }
  static IndexSequence columns(std::vector<int> v) { return {std::move(v), Kind::Columns}; }
  static IndexSequence identity(int n, Kind kind);
  std::string str() const;
  friend bool operator==(const IndexSequence& a, const IndexSequence& b) {
    return a.kind == b.kind && a.values == b.values;
  }
};

// Outcome of the gamma/delta constructions: either the partition, or the
// first index at which weak decrease fails.  Rejection is a value, not an
// error, so enumeration can filter cheaply.
struct ShapeResult {
  std::optional<Partition> shape;
  int first_violation = 0;  // 1-based position in the candidate sequence, 0 if accepted
  bool accepted() const { return shape.has_value(); }
};

// gamma_{a_i} = mu_{a_i} + lam_i, gamma_b = mu_b elsewhere; accepted iff
// weakly decreasing.
ShapeResult build_gamma(const Partition& lam, const Partition& mu, const IndexSequence& a);
// delta'_{b_j} = mu'_{b_j} + lam'_j, delta'_b = mu'_b elsewhere; returns the
// conjugate of delta' when accepted.
ShapeResult build_delta(const Partition& lam, const Partition& mu, const IndexSequence& b);

// All pairwise-distinct sequences whose build passes validation, in
// lexicographic order of the value vectors.  Values range over {1..B} with
// B = mu'_1 + lam'_1 (rows) or mu_1 + lam_1 (columns); any index beyond B
// would place a nonzero entry after a zero one, so the range is exhaustive.
std::vector<IndexSequence> enumerate_index_sequences(const Partition& lam, const Partition& mu,
                                                     IndexSequence::Kind kind);

}  // namespace hecke
