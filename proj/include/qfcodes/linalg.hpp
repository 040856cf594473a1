#pragma once

// Dense linear algebra over a table-driven Field. Matrices are row-major
// vectors of element indices.

#include "qfcodes/gf_tower.hpp"

#include <vector>

namespace qfcodes {

using Matrix = std::vector<std::vector<Index>>;

Matrix transpose(const Matrix& a);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

/// Reduces `a` to reduced row-echelon form in place, drops zero rows, and
/// returns the pivot column of each remaining row.
std::vector<std::size_t> rref(const Field& f, Matrix& a);

std::size_t rank(const Field& f, Matrix a);

/// Rows spanning {v : a v^T = 0}; one vector per free column of rref(a).
Matrix nullspace(const Field& f, const Matrix& a, std::size_t cols);

}  // namespace qfcodes
