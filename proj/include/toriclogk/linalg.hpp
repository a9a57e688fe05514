#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toriclogk/rational.hpp"

// Small dense exact linear algebra over Q. Matrices are row-major vectors of
// rows; sizes here never exceed a few dozen.
namespace toriclogk::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

Rational determinant(Matrix m);

/// Dimension of the affine hull plus one; 0 for the empty set.
std::size_t affine_rank(const std::vector<const RatVec*>& points);

/// Solves the square system a x = b. Returns nullopt when a is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
RatVec primitive_integer(const RatVec& v);

/// Normal of the hyperplane through points whose affine rank is exactly n
/// (ambient dimension n), as a primitive integer vector with arbitrary sign.
/// Returns nullopt when the affine rank is not n.
std::optional<RatVec> hyperplane_normal(const std::vector<const RatVec*>& points, std::size_t n);

}  // namespace toriclogk::linalg
