#include "hecke/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

LabelOrder LabelOrder::natural(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i + 1;
  return LabelOrder(std::move(r));
}

LabelOrder LabelOrder::shifted_chain(int l, int m) {
  std::vector<int> r(l + m);
  for (int q = 1; q <= m; ++q) r[l + q - 1] = q;
  for (int p = 1; p <= l; ++p) r[p - 1] = m + p;
  return LabelOrder(std::move(r));
}

bool LabelOrder::is_natural() const {
  for (int i = 0; i < n(); ++i)
    if (rank_[i] != i + 1) return false;
  return true;
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : StandardTableau(std::move(shape), std::move(rows), LabelOrder()) {}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows,
                                 LabelOrder order)
    : shape_(std::move(shape)), rows_(std::move(rows)), order_(std::move(order)) {
  int n = shape_.size();
  if (order_.n() == 0) order_ = LabelOrder::natural(n);
  if (order_.n() != n) throw PreconditionError("label order size mismatch");
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw PreconditionError("tableau row count does not match shape");
  std::vector<bool> seen(n, false);
  for (int i = 1; i <= shape_.rows(); ++i) {
    if (static_cast<int>(rows_[i - 1].size()) != shape_.part(i))
      throw PreconditionError("tableau row length does not match shape");
    for (int v : rows_[i - 1]) {
      if (v < 1 || v > n || seen[v - 1]) throw PreconditionError("tableau entries must be a bijection onto 1..n");
      seen[v - 1] = true;
    }
  }
  for (int i = 1; i <= shape_.rows(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j) {
      if (j < shape_.part(i) && !order_.precedes(rows_[i - 1][j - 1], rows_[i - 1][j]))
        throw PreconditionError("tableau not standard along row " + std::to_string(i));
      if (i < shape_.rows() && j <= shape_.part(i + 1) &&
          !order_.precedes(rows_[i - 1][j - 1], rows_[i][j - 1]))
        throw PreconditionError("tableau not standard down column " + std::to_string(j));
    }
  index_boxes();
}

void StandardTableau::index_boxes() {
  box_of_.assign(shape_.size(), Box{});
  for (int i = 1; i <= shape_.rows(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j) box_of_[rows_[i - 1][j - 1] - 1] = {i, j};
}

StandardTableau StandardTableau::parse(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, '/')) {
    std::vector<int> entries;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      try {
        size_t pos = 0;
        entries.push_back(std::stoi(tok, &pos));
        if (pos != tok.size()) throw ParseError("bad tableau entry '" + tok + "'");
      } catch (const std::exception&) {
        throw ParseError("bad tableau '" + text + "'");
      }
    }
    parts.push_back(static_cast<int>(entries.size()));
    rows.push_back(std::move(entries));
  }
  try {
    return StandardTableau(Partition(std::move(parts)), std::move(rows));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

std::string StandardTableau::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += '/';
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

std::vector<int> StandardTableau::row_word() const {
  std::vector<int> w;
  w.reserve(shape_.size());
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<StandardTableau> enumerate_standard(const Partition& shape) {
  std::vector<StandardTableau> out;
  int n = shape.size();
  std::vector<std::vector<int>> rows(shape.rows());
  auto rec = [&](auto&& self, int label) -> void {
    if (label > n) {
      std::vector<std::vector<int>> copy = rows;
      out.emplace_back(shape, std::move(copy));
      return;
    }
    for (int i = 1; i <= shape.rows(); ++i) {
      int filled = static_cast<int>(rows[i - 1].size());
      if (filled >= shape.part(i)) continue;
      // Cell (i, filled+1) is addable iff the row above is already longer.
      if (i > 1 && static_cast<int>(rows[i - 2].size()) <= filled) continue;
      rows[i - 1].push_back(label);
      self(self, label + 1);
      rows[i - 1].pop_back();
    }
  };
  if (n == 0) {
    out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.row_word() < b.row_word();
  });
  return out;
}

StandardTableau column_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.rows());
  for (int i = 1; i <= shape.rows(); ++i) rows[i - 1].resize(shape.part(i));
  Partition conj = shape.conjugate();
  int label = 1;
  for (int j = 1; j <= shape.part(1); ++j)
    for (int i = 1; i <= conj.part(j); ++i) rows[i - 1][j - 1] = label++;
  return StandardTableau(shape, std::move(rows));
}

std::vector<int> content_vector(const StandardTableau& t) {
  std::vector<int> c(t.size());
  for (int p = 1; p <= t.size(); ++p) c[p - 1] = content(t.box_of(p));
  return c;
}

StandardTableau reflect(const StandardTableau& t) {
  Partition conj = t.shape().conjugate();
  std::vector<std::vector<int>> rows(conj.rows());
  for (int i = 1; i <= conj.rows(); ++i) rows[i - 1].resize(conj.part(i));
  for (const Box& b : t.shape().boxes()) rows[b.col - 1][b.row - 1] = t.entry(b);
  LabelOrder order = t.order();
  return StandardTableau(conj, std::move(rows), order);
}

StandardTableau build_Gamma(const Partition& lam, const Partition& mu, const IndexSequence& a,
                            const StandardTableau& M) {
  if (M.shape() != mu) throw PreconditionError("tableau M must have shape mu");
  ShapeResult g = build_gamma(lam, mu, a);
  if (!g.accepted())
    throw PreconditionError("sequence rejected at position " + std::to_string(g.first_violation));
  const Partition& gamma = *g.shape;
  const int l = lam.size();
  const int m = mu.size();

  std::vector<std::vector<int>> rows(gamma.rows());
  for (int i = 1; i <= gamma.rows(); ++i) rows[i - 1].assign(gamma.part(i), 0);

  // Labels l+1..l+m sit where M places 1..m.
  for (int q = 1; q <= m; ++q) {
    Box b = M.box_of(q);
    rows[b.row - 1][b.col - 1] = l + q;
  }

  // Rows of the column tableau of lam with part size j map, in order, to the
  // increasing rearrangement of the indices a_i with lam_i = j; entries fill
  // the boxes of gamma left free by mu in that row.
  StandardTableau lam_col = column_tableau(lam);
  Partition lam_conj = lam.conjugate();
  int max_part = lam.part(1);
  for (int j = 1; j <= max_part; ++j) {
    int from = lam_conj.part(j + 1) + 1;
    int to = lam_conj.part(j);
    std::vector<int> targets;
    for (int i = from; i <= to; ++i) targets.push_back(a.values[i - 1]);
    std::sort(targets.begin(), targets.end());
    for (int r = 0; r < static_cast<int>(targets.size()); ++r) {
      int source_row = from + r;
      int target_row = targets[r];
      int offset = mu.part(target_row);
      for (int col = 1; col <= lam.part(source_row); ++col)
        rows[target_row - 1][offset + col - 1] = lam_col.entry({source_row, col});
    }
  }
  return StandardTableau(gamma, std::move(rows), LabelOrder::shifted_chain(l, m));
}

StandardTableau relabel_to_natural(const StandardTableau& gamma_tableau, int l, int m) {
  if (gamma_tableau.size() != l + m) throw PreconditionError("tableau size must be l+m");
  std::vector<std::vector<int>> rows = gamma_tableau.rows();
  for (auto& row : rows)
    for (int& v : row) v = (v > l) ? v - l : v + m;
  return StandardTableau(gamma_tableau.shape(), std::move(rows));
}

StandardTableau build_Theta(const StandardTableau& Lambda, int m) {
  const Partition& lam = Lambda.shape();
  if (lam.empty()) throw PreconditionError("Theta needs a nonempty shape");
  for (int i = 1; i <= lam.rows(); ++i)
    if (m > lam.part(i)) throw PreconditionError("new row length must be at most every part");
  if (m < 1) throw PreconditionError("new row length must be positive");
  std::vector<int> parts = lam.parts();
  parts.push_back(m);
  std::vector<std::vector<int>> rows = Lambda.rows();
  std::vector<int> last(m);
  for (int q = 1; q <= m; ++q) last[q - 1] = lam.size() + q;
  rows.push_back(std::move(last));
  return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

}  // namespace hecke
