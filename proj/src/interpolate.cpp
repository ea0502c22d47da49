#include "hecke/interpolate.hpp"

#include "hecke/errors.hpp"

namespace hecke {

RatFunc ratfunc_interpolate(const std::vector<std::pair<Rational, Rational>>& samples,
                            int max_degree) {
  const int d = max_degree;
  const int unknowns = 2 * (d + 1);  // numerator then denominator coefficients
  if (static_cast<int>(samples.size()) < 2 * d + 1)
    throw PreconditionError("need at least 2*degree+1 samples");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw PreconditionError("duplicate abscissa " + samples[i].first.str());

  // Homogeneous system P(x) - y Q(x) = 0; any nullspace vector that passes
  // verification gives the function.
  std::vector<std::vector<Rational>> m(samples.size(), std::vector<Rational>(unknowns));
  for (size_t row = 0; row < samples.size(); ++row) {
    const auto& [x, y] = samples[row];
    Rational pw = Rational::one();
    for (int k = 0; k <= d; ++k) {
      m[row][k] = pw;
      m[row][d + 1 + k] = -y * pw;
      pw *= x;
    }
  }

  // Gaussian elimination to reduced row echelon form.
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < unknowns && row < m.size(); ++col) {
    size_t pr = row;
    while (pr < m.size() && m[pr][col].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    Rational inv = m[row][col].inverse();
    for (int j = col; j < unknowns; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (int j = col; j < unknowns; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(unknowns, false);
  for (int c : pivot_col) is_pivot[c] = true;

  for (int free_col = unknowns - 1; free_col >= 0; --free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> sol(unknowns);
    sol[free_col] = Rational::one();
    for (size_t r = 0; r < pivot_col.size(); ++r)
      sol[pivot_col[r]] = -m[r][free_col];
    std::vector<Rational> num_c(sol.begin(), sol.begin() + d + 1);
    std::vector<Rational> den_c(sol.begin() + d + 1, sol.end());
    Poly num(std::move(num_c)), den(std::move(den_c));
    if (den.is_zero()) continue;
    RatFunc candidate(num, den);
    bool ok = true;
    for (const auto& [x, y] : samples) {
      if (candidate.den().eval(x).is_zero() || candidate.eval(x) != y) {
        ok = false;
        break;
      }
    }
    if (ok) return candidate;
  }
  throw PreconditionError("no rational function of degree <= " + std::to_string(d) +
                          " through the samples");
}

}  // namespace hecke
