#pragma once

// Exact integer linear algebra on small dense matrices. Rows are LatticePoints.

#include <optional>
#include <span>
#include <vector>

#include "rspan/arith.hpp"

namespace rspan::linalg {

/// Determinant of the square matrix whose rows are `rows` (Bareiss elimination).
Integer determinant(std::span<const LatticePoint> rows);

std::size_t rank(std::span<const LatticePoint> rows);

/// For n-1 vectors in Z^n, the vector of signed maximal minors (generalized
/// cross product). It is orthogonal to every input row and is zero exactly
/// when the rows are linearly dependent.
LatticePoint cross(std::span<const LatticePoint> rows, std::size_t dim);

/// Integer basis of {x : <row, x> = 0 for all rows}, each vector primitive.
std::vector<LatticePoint> kernel_basis(std::span<const LatticePoint> rows, std::size_t dim);

/// Hermite-style row echelon form over Z by Euclidean row operations.
/// Zero rows are dropped; the result spans the same lattice as `rows`.
std::vector<LatticePoint> echelon_form(std::span<const LatticePoint> rows, std::size_t dim);

/// Index [Z^dim : L] of the lattice spanned by `rows`, or nullopt when L has
/// rank below `dim`.
std::optional<Integer> lattice_index(std::span<const LatticePoint> rows, std::size_t dim);

} // namespace rspan::linalg
