#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "hecke/representations.hpp"

namespace hecke {

namespace {

// Swap the labels p, p+1 inside a tableau; returns the rows.
std::vector<std::vector<int>> swapped_rows(const StandardTableau& t, int p) {
  std::vector<std::vector<int>> rows = t.rows();
  Box bp = t.box_of(p), bq = t.box_of(p + 1);
  rows[bp.row - 1][bp.col - 1] = p + 1;
  rows[bq.row - 1][bq.col - 1] = p;
  return rows;
}

}  // namespace

SeminormalModel::SeminormalModel(const Partition& shape)
    : shape_(shape), basis_(enumerate_standard(shape)) {
  const int n = shape.size();
  const int d = dim();
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < d; ++t) index[basis_[t].row_word()] = t;

  gen_.reserve(std::max(n - 1, 0));
  for (int p = 1; p < n; ++p) {
    Matrix<Rational> m(d, d);
    for (int t = 0; t < d; ++t) {
      const StandardTableau& T = basis_[t];
      Box bp = T.box_of(p), bq = T.box_of(p + 1);
      int axial = content(bq) - content(bp);
      if (bp.row == bq.row) {
        m.at(t, t) = Rational::one();
      } else if (bp.col == bq.col) {
        m.at(t, t) = Rational(-1);
      } else {
        // Young's seminormal action on the swap pair: 1/axial on the
        // diagonal; the off-diagonal weight 1 - 1/axial^2 goes from the
        // positive-distance member so that s_p squares to the identity.
        Rational inv = Rational(1, axial);
        int other = index.at(StandardTableau(shape_, swapped_rows(T, p)).row_word());
        m.at(t, t) = inv;
        m.at(other, t) = axial > 0 ? Rational::one() - inv * inv : Rational::one();
      }
    }
    gen_.push_back(std::move(m));
  }
}

const SeminormalModel& SeminormalModel::of(const Partition& shape) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<SeminormalModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(shape);
  if (it == cache.end())
    it = cache.emplace(shape, std::unique_ptr<SeminormalModel>(new SeminormalModel(shape))).first;
  return *it->second;
}

int SeminormalModel::index_of(const StandardTableau& t) const {
  auto word = t.row_word();
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].row_word() == word) return i;
  throw PreconditionError("tableau is not in the basis of this model");
}

const Matrix<Rational>& SeminormalModel::matrix_of(const Permutation& s) const {
  if (s.degree() != n()) throw PreconditionError("permutation degree mismatch");
  std::lock_guard<std::mutex> lock(table_mutex_);
  std::vector<Permutation> pending;
  Permutation cur = s;
  // Peel descents until a cached ancestor (ultimately the identity).
  while (table_.find(cur) == table_.end()) {
    int descent = 0;
    for (int i = 1; i < n(); ++i)
      if (cur(i) > cur(i + 1)) { descent = i; break; }
    if (descent == 0) {
      table_.emplace(cur, Matrix<Rational>::identity(dim()));
      break;
    }
    pending.push_back(cur);
    cur = cur * Permutation::transposition(n(), descent, descent + 1);
  }
  while (!pending.empty()) {
    Permutation next = pending.back();
    pending.pop_back();
    int descent = 0;
    for (int i = 1; i < n(); ++i)
      if (next(i) > next(i + 1)) { descent = i; break; }
    Permutation shorter = next * Permutation::transposition(n(), descent, descent + 1);
    table_.emplace(next, table_.at(shorter) * gen_[descent - 1]);
  }
  return table_.at(s);
}

Matrix<Rational> SeminormalModel::matrix_of(const RationalElement& x) const {
  if (x.degree() != n()) throw PreconditionError("element degree mismatch");
  Matrix<Rational> acc(dim(), dim());
  for (const auto& [p, c] : x.terms()) acc += c * matrix_of(p);
  return acc;
}

Matrix<Rational> SeminormalModel::jucys_murphy(int p) const {
  Matrix<Rational> acc(dim(), dim());
  for (int k = 1; k < p; ++k) acc += matrix_of(Permutation::transposition(n(), k, p));
  return acc;
}

bool SeminormalModel::verify_jm_diagonal() const {
  for (int p = 1; p <= n(); ++p) {
    Matrix<Rational> jm = jucys_murphy(p);
    if (!jm.is_diagonal()) return false;
    for (int t = 0; t < dim(); ++t)
      if (jm.at(t, t) != Rational(content(basis_[t].box_of(p)))) return false;
  }
  return true;
}

RationalElement matrix_element_F(const StandardTableau& Lambda) {
  if (!Lambda.order().is_natural())
    throw PreconditionError("matrix elements are defined for naturally ordered tableaux");
  const SeminormalModel& model = SeminormalModel::of(Lambda.shape());
  const int i = model.index_of(Lambda);
  const int n = Lambda.size();
  RationalElement f(n);
  for (const Permutation& s : all_permutations(n)) f.add_term(s, model.matrix_of(s).at(i, i));
  return f;
}

RationalElement column_antisymmetrizer(const Partition& shape) {
  const int n = shape.size();
  StandardTableau col = column_tableau(shape);
  RationalElement q = RationalElement::unit(n);
  Partition conj = shape.conjugate();
  for (int j = 1; j <= shape.part(1); ++j) {
    // Alternating sum over permutations of the labels in column j.
    std::vector<int> labels;
    for (int i = 1; i <= conj.part(j); ++i) labels.push_back(col.entry({i, j}));
    std::vector<int> arrangement(labels);
    RationalElement alt(n);
    std::sort(arrangement.begin(), arrangement.end());
    do {
      std::vector<uint8_t> img(n);
      for (int k = 1; k <= n; ++k) img[k - 1] = static_cast<uint8_t>(k);
      for (size_t k = 0; k < labels.size(); ++k) img[labels[k] - 1] = static_cast<uint8_t>(arrangement[k]);
      Permutation sigma{std::vector<uint8_t>(img)};
      alt.add_term(sigma, Rational(sigma.sign()));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    q = q * alt;
  }
  return q;
}

RationalElement relabeled_ideal_generator(const StandardTableau& Lambda, const StandardTableau& M) {
  const int l = Lambda.size();
  const int m = M.size();
  RationalElement f_lam = matrix_element_F(Lambda).shifted(m);
  if (m == 0) return f_lam;
  RationalElement f_mu = matrix_element_F(M).extended(l + m);
  return f_lam * f_mu;
}

int multiplicity_in_W(const Partition& nu, const StandardTableau& Lambda,
                      const StandardTableau& M) {
  if (nu.size() != Lambda.size() + M.size())
    throw PreconditionError("sizes must satisfy |nu| = |lambda| + |mu|");
  const SeminormalModel& model = SeminormalModel::of(nu);
  return rank(model.matrix_of(relabeled_ideal_generator(Lambda, M)));
}

Prop6Report verify_prop6(const Partition& lam, const Partition& mu, const IndexSequence& a,
                         const StandardTableau& M) {
  ShapeResult g = build_gamma(lam, mu, a);
  if (!g.accepted()) throw PreconditionError("sequence rejected by the gamma construction");
  const int l = lam.size();
  const int m = mu.size();

  StandardTableau Gamma = build_Gamma(lam, mu, a, M);
  StandardTableau Gamma_nat = relabel_to_natural(Gamma, l, m);

  const SeminormalModel& model = SeminormalModel::of(*g.shape);
  Matrix<Rational> image = model.matrix_of(relabeled_ideal_generator(column_tableau(lam), M));

  Prop6Report report;
  report.rank = rank(image);
  report.rank_one = (report.rank == 1);

  // Q v_Gamma, with Q relabeled alongside the generator.
  Matrix<Rational> q = model.matrix_of(column_antisymmetrizer(lam).shifted(m));
  std::vector<Rational> w = q.column(model.index_of(Gamma_nat));

  // Every column of the image matrix must be a multiple of w, and at least
  // one must be nonzero.
  bool some_nonzero = false;
  bool all_proportional = true;
  int pivot = -1;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (!w[i].is_zero()) { pivot = i; break; }
  if (pivot < 0) {
    all_proportional = false;  // Q v_Gamma = 0 would falsify the claim outright
  } else {
    for (int j = 0; j < image.cols() && all_proportional; ++j) {
      Rational ratio = image.at(pivot, j) / w[pivot];
      for (int i = 0; i < image.rows(); ++i) {
        if (image.at(i, j) != ratio * w[i]) { all_proportional = false; break; }
      }
      if (!ratio.is_zero()) some_nonzero = true;
    }
  }
  report.image_matches = all_proportional && some_nonzero;
  return report;
}

}  // namespace hecke
