#include "hecke/matrix.hpp"

namespace hecke {

int rank(const Matrix<Rational>& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (int j = 0; j < cols; ++j) scale = lcm(scale, m.at(i, j).denominator());
    for (int j = 0; j < cols; ++j)
      a[i][j] = m.at(i, j).numerator() * (scale / m.at(i, j).denominator());
  }

  int rank_count = 0;
  mpz_class prev_pivot = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (a[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev_pivot;
      a[i][col] = 0;
    }
    prev_pivot = a[row][col];
    ++row;
    ++rank_count;
  }
  return rank_count;
}

}  // namespace hecke
