#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohn/matrix.hpp"

namespace cohn {

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form. The pivot in each column is the first nonzero
// entry at or below the current row, which makes the output deterministic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right null space, one vector per free column, in increasing
// order of the free column; each vector has a 1 at its free column.
std::vector<Vector> kernel_basis(const Matrix& m);

// Fraction-free Bareiss over Q (after clearing row denominators), Gaussian
// elimination with pivot search over F_p.
Scalar det(const Matrix& m);

bool is_invertible(const Matrix& m);

// Gauss-Jordan inverse; throws SINGULAR_G on singular input.
Matrix inverse(const Matrix& m);

// Solves b * x = y for a matrix b of full column rank. Returns nullopt when
// y is not in the column span of b.
std::optional<Matrix> solve_full_column_rank(const Matrix& b, const Matrix& y);

// General solve: any x with a * x = y (free variables set to 0) or nullopt.
std::optional<Vector> solve_any(const Matrix& a, const Vector& y);

}  // namespace cohn
