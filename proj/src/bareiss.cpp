#include "degfac/bareiss.hpp"

#include <gmpxx.h>

#include "degfac/error.hpp"

namespace degfac {

LinearSolveResult bareiss_solve(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& b) {
  size_t rows = a.size();
  require(rows == b.size(), errc::arity_mismatch, "solve: rhs size mismatch");
  size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    require(r.size() == cols, errc::arity_mismatch, "solve: ragged matrix");

  // Integer augmented matrix, denominators cleared per row.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    mpz_class L = 1;
    for (size_t j = 0; j < cols; ++j)
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a[i][j].den().get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), b[i].den().get_mpz_t());
    for (size_t j = 0; j < cols; ++j)
      m[i][j] = a[i][j].num() * (L / a[i][j].den());
    m[i][cols] = b[i].num() * (L / b[i].den());
  }

  std::vector<size_t> pivot_col;  // pivot column of row k
  mpz_class prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j <= cols; ++j) {
        mpz_class t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolveResult res;
  for (size_t i = row; i < rows; ++i) {
    if (m[i][cols] != 0) {
      res.consistent = false;
      return res;
    }
  }
  res.consistent = true;
  res.unique = pivot_col.size() == cols;
  if (!res.unique) return res;

  res.solution.assign(cols, Rational(0));
  for (size_t k = row; k-- > 0;) {
    size_t c = pivot_col[k];
    Rational acc(m[k][cols]);
    for (size_t j = c + 1; j < cols; ++j)
      acc -= Rational(m[k][j]) * res.solution[j];
    res.solution[c] = acc / Rational(m[k][c]);
  }
  return res;
}

}  // namespace degfac
