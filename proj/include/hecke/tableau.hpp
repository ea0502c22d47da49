#pragma once

#include <string>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

// Total order on the labels {1..n}, given by ranks: label x precedes label y
// iff rank(x) < rank(y).  The default is the natural order.  Tableaux carry
// their order explicitly, so standardness with respect to a reordered chain
// is data rather than duplicated code.
class LabelOrder {
 public:
  LabelOrder() = default;
  static LabelOrder natural(int n);
  // The chain l+1, ..., l+m, 1, ..., l.
  static LabelOrder shifted_chain(int l, int m);

  int n() const { return static_cast<int>(rank_.size()); }
  int rank(int label) const { return rank_[label - 1]; }
  bool precedes(int x, int y) const { return rank(x) < rank(y); }
  bool is_natural() const;

 private:
  explicit LabelOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  std::vector<int> rank_;  // rank_[label-1] in 1..n
};

// Filling of a Young diagram by the labels {1..n}, strictly increasing along
// rows and down columns in the carried order.  Construction validates.
class StandardTableau {
 public:
  StandardTableau() : StandardTableau(Partition(), {}) {}  // the empty tableau
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows, LabelOrder order);

  static StandardTableau parse(const std::string& text);  // "1,3,5/2,4"
  std::string str() const;

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const LabelOrder& order() const { return order_; }

  int entry(const Box& b) const { return rows_[b.row - 1][b.col - 1]; }
  Box box_of(int label) const { return box_of_[label - 1]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // Concatenation of the rows, top to bottom; fixes the enumeration order.
  std::vector<int> row_word() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }

 private:
  void index_boxes();
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  LabelOrder order_;
  std::vector<Box> box_of_;
};

// All standard tableaux of the given shape under the natural order, sorted
// lexicographically by row-reading word.
std::vector<StandardTableau> enumerate_standard(const Partition& shape);

// Fills columns consecutively downward, leftmost column first.
StandardTableau column_tableau(const Partition& shape);

// c_p = content of the box holding label p, indexed by label.
std::vector<int> content_vector(const StandardTableau& t);

// Entries transposed across the main diagonal; shape conjugates.
StandardTableau reflect(const StandardTableau& t);

// Tableau of shape gamma holding l+1..l+m in the positions M gives to 1..m,
// and 1..l placed row-block by row-block from the column tableau of lam;
// standard with respect to the chain l+1,...,l+m,1,...,l.
StandardTableau build_Gamma(const Partition& lam, const Partition& mu, const IndexSequence& a,
                            const StandardTableau& M);

// Order isomorphism induced by the shifted chain: label l+q becomes q and
// label p becomes m+p, producing a natural-order standard tableau.
StandardTableau relabel_to_natural(const StandardTableau& gamma_tableau, int l, int m);

// Shape of Lambda plus one new bottom row of length m holding l+1..l+m;
// requires m <= every part of the shape.
StandardTableau build_Theta(const StandardTableau& Lambda, int m);

}  // namespace hecke
