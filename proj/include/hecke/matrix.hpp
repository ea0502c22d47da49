#pragma once

#include <vector>

#include <gmpxx.h>

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// Dense exact matrix, sized for representation work (dimensions stay small).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(Rational::one());
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const F& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw PreconditionError("matrix dimension mismatch");
    Matrix r(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const F& v = x.at(i, k);
        if (v == F()) continue;
        for (int j = 0; j < y.c_; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw PreconditionError("matrix dimension mismatch");
    Matrix r(x.r_, x.c_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }

  friend Matrix operator*(const F& s, const Matrix& y) {
    Matrix r(y.r_, y.c_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * y.a_[i];
    return r;
  }

  Matrix& operator+=(const Matrix& y) { return *this = *this + y; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero() const {
    for (const F& v : a_) if (!(v == F())) return false;
    return true;
  }

  bool is_diagonal() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (i != j && !(at(i, j) == F())) return false;
    return true;
  }

  std::vector<F> column(int j) const {
    std::vector<F> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<F> a_;
};

// Rank by fraction-free (Bareiss) elimination: rows are first scaled to
// integers, row scaling leaves the rank unchanged.
int rank(const Matrix<Rational>& m);

}  // namespace hecke
