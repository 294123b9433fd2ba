#pragma once

#include <cstddef>
#include <vector>

#include "polystab/matrix.hpp"

// Exact Gaussian elimination helpers over rectangular row lists.
namespace polystab::linalg {

struct RowEchelon {
  std::vector<Vector> rows;            // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;     // pivot column of each row
};

RowEchelon rref(std::vector<Vector> rows, std::size_t ncols);

std::size_t rank(const std::vector<Vector>& rows, std::size_t ncols);

// Basis of { x : r . x = 0 for every row r }.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols);

// Inverse of a square nonsingular matrix given as rows. Throws InputError
// when singular.
std::vector<Vector> inverse(const std::vector<Vector>& rows);

}  // namespace polystab::linalg
