#pragma once

#include <optional>
#include <vector>

#include "riesz/numeric/rational.hpp"

namespace riesz::closure {

using num::Rational;
using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Some solution of A c = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<Row> solve(const Matrix& a, const Row& b);

/// A nonzero c with A c = 0 for an A with `cols` columns, or nullopt when the
/// columns are independent.
std::optional<Row> null_vector(const Matrix& a, std::size_t cols);

}  // namespace riesz::closure
