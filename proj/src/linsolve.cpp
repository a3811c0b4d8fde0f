#include "qcas/linsolve.hpp"

namespace qcas {

std::vector<QField> solve_exact(std::vector<std::vector<QField>> a, std::vector<QField> b) {
  const size_t rows = a.size();
  if (b.size() != rows) throw SolveFailure("right-hand side length mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();
  if (rows < cols) throw SolveFailure("underdetermined system");

  // Gauss-Jordan with first-nonzero pivoting; everything stays exact.
  for (size_t col = 0; col < cols; ++col) {
    size_t pivot = col;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) throw SolveFailure("rank-deficient system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    QField inv = a[col][col].inverse();
    for (size_t j = col; j < cols; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QField f = a[r][col];
      for (size_t j = col; j < cols; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  for (size_t r = cols; r < rows; ++r)
    if (!b[r].is_zero()) throw SolveFailure("inconsistent system");

  return std::vector<QField>(b.begin(), b.begin() + static_cast<long>(cols));
}

}  // namespace qcas
