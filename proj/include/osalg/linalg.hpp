#pragma once

#include <optional>
#include <vector>

#include "osalg/scalar.hpp"

namespace osalg {

/// Row-major dense rational matrix.
using MatQ = std::vector<std::vector<Scalar>>;

int matrix_rank(MatQ m);

/// pre: square (possibly 0x0, determinant 1).
Scalar matrix_determinant(MatQ m);

/// Solves sum_i c_i * columns[i] = target exactly. Returns nullopt when the
/// system is inconsistent; when the columns are linearly independent the
/// solution is unique.
std::optional<std::vector<Scalar>> solve_in_columns(const MatQ& columns,
                                                    const std::vector<Scalar>& target);

}  // namespace osalg
