#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/matrix.hpp"
#include "hecke/tableau.hpp"

namespace hecke {

// Young's seminormal realization of the irreducible module of a shape: the
// basis is the list of standard tableaux (row-word order) and each adjacent
// transposition s_p acts by an exact rational matrix.  The seminormal form
// is used instead of the orthogonal one so that no square roots appear;
// diagonal matrix entries agree between the two forms because the basis
// change is diagonal, and that is all the matrix elements F need.
class SeminormalModel {
 public:
  static const SeminormalModel& of(const Partition& shape);  // process-wide cache

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  int index_of(const StandardTableau& t) const;

  // Matrix of s_p = (p,p+1), p in 1..n-1.
  const Matrix<Rational>& generator(int p) const { return gen_[p - 1]; }

  const Matrix<Rational>& matrix_of(const Permutation& s) const;
  Matrix<Rational> matrix_of(const RationalElement& x) const;

  // Jucys-Murphy element sigma_{1p}+...+sigma_{p-1,p} (zero matrix for p=1).
  Matrix<Rational> jucys_murphy(int p) const;
  // Exact check that every JM matrix is diagonal with the tableau contents
  // on the diagonal.
  bool verify_jm_diagonal() const;

 private:
  explicit SeminormalModel(const Partition& shape);
  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::vector<Matrix<Rational>> gen_;
  mutable std::map<Permutation, Matrix<Rational>> table_;  // lazily grown
  mutable std::mutex table_mutex_;
};

// Diagonal matrix element of the module of Lambda's shape at Lambda:
// coefficient of sigma is the (Lambda,Lambda) entry of its matrix.
// Satisfies F^2 = (l!/dim) F.
RationalElement matrix_element_F(const StandardTableau& Lambda);

// Murnaghan-Nakayama character value of the given shape at a cycle type.
long long character(const Partition& shape, const Partition& cycle_type);

// Z_nu = (dim/n!) sum over sigma of chi(type(sigma)) sigma.
RationalElement central_idempotent(const Partition& nu, int n);

// Alternating sum over the column stabilizer of the column tableau.
RationalElement column_antisymmetrizer(const Partition& shape);

// The generator F_Lambda F-bar_M of the induced-module ideal, relabeled by
// tau^{-1} so that M occupies 1..m and Lambda occupies m+1..m+l.  Used by
// the rank computations that work in naturally ordered models.
RationalElement relabeled_ideal_generator(const StandardTableau& Lambda, const StandardTableau& M);

// Multiplicity of the nu-isotypic component of the induced module: rank of
// F_Lambda F-bar_M acting in the model of nu (equals the Littlewood-
// Richardson coefficient).
int multiplicity_in_W(const Partition& nu, const StandardTableau& Lambda, const StandardTableau& M);

struct Prop6Report {
  int rank = 0;
  bool rank_one = false;
  bool image_matches = false;
  bool pass() const { return rank_one && image_matches; }
};

// In the model of the accepted shape gamma: the matrix of F_col(lam) F-bar_M
// has rank one and its image is spanned by Q v_Gamma, Q the column
// antisymmetrizer of the column tableau of lam.  Everything is conjugated by
// tau into natural labels first.
Prop6Report verify_prop6(const Partition& lam, const Partition& mu, const IndexSequence& a,
                         const StandardTableau& M);

}  // namespace hecke
