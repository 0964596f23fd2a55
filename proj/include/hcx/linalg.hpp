#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcx/rational.hpp"

namespace hcx::linalg {

/// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<Vector>;

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
Matrix rref(Matrix m, std::size_t cols, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column of the RREF.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols);

/// Unique solution of the square system a x = b, or nullopt if singular.
std::optional<Vector> solve_square(const Matrix& a, const Vector& b);

/// Some solution of a x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve_any(const Matrix& a, const Vector& b, std::size_t cols);

Matrix transpose(const Matrix& m, std::size_t cols);
Vector multiply(const Matrix& m, const Vector& x);

/// True iff v lies in the row space of m.
bool in_row_space(const Matrix& m, const Vector& v, std::size_t cols);

}  // namespace hcx::linalg
