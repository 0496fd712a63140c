#include "osalg/linalg.hpp"

#include <cassert>

#include "osalg/errors.hpp"

namespace osalg {

namespace {

// Row-echelon elimination in place; returns (pivot count, sign of row swaps).
// Exact rationals need no pivoting strategy beyond first-nonzero.
std::pair<int, int> echelonize(MatQ& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int swap_sign = 1;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r)
      if (sgn(m[r][col]) != 0) {
        found = r;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row) {
      std::swap(m[found], m[pivot_row]);
      swap_sign = -swap_sign;
    }
    for (int r = pivot_row + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Scalar factor = m[r][col] / m[pivot_row][col];
      for (int c = col; c < cols; ++c) {
        Scalar delta = factor * m[pivot_row][c];
        m[r][c] -= delta;
      }
    }
    ++pivot_row;
  }
  return {pivot_row, swap_sign};
}

}  // namespace

int matrix_rank(MatQ m) {
  return echelonize(m).first;
}

Scalar matrix_determinant(MatQ m) {
  std::size_t n = m.size();
  for (const auto& row : m) assert(row.size() == n);
  auto [pivots, swap_sign] = echelonize(m);
  if (pivots < static_cast<int>(n)) return Scalar(0);
  Scalar det(swap_sign);
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::optional<std::vector<Scalar>> solve_in_columns(const MatQ& columns,
                                                    const std::vector<Scalar>& target) {
  std::size_t k = columns.size();
  std::size_t d = target.size();
  for (const auto& col : columns)
    if (col.size() != d) throw precondition_error("solve: column length mismatch");

  // Augmented system, rows indexed by ambient coordinate.
  MatQ aug(d, std::vector<Scalar>(k + 1, Scalar(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) aug[i][j] = columns[j][i];
  for (std::size_t i = 0; i < d; ++i) aug[i][k] = target[i];

  echelonize(aug);

  std::vector<int> pivot_col(d, -1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c <= k; ++c)
      if (sgn(aug[r][c]) != 0) {
        pivot_col[r] = static_cast<int>(c);
        break;
      }
  for (std::size_t r = 0; r < d; ++r)
    if (pivot_col[r] == static_cast<int>(k)) return std::nullopt;

  std::vector<Scalar> x(k, Scalar(0));
  for (int r = static_cast<int>(d) - 1; r >= 0; --r) {
    if (pivot_col[r] < 0) continue;
    std::size_t pc = static_cast<std::size_t>(pivot_col[r]);
    Scalar rhs = aug[r][k];
    for (std::size_t c = pc + 1; c < k; ++c) {
      Scalar delta = aug[r][c] * x[c];
      rhs -= delta;
    }
    x[pc] = rhs / aug[r][pc];
  }
  return x;
}

}  // namespace osalg
