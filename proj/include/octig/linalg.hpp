#pragma once

#include "octig/scalar.hpp"

#include <optional>
#include <vector>

namespace octig {

using ScalarVec = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVec>;  // row-major

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<int> rref(ScalarMatrix& m);

int rank(ScalarMatrix m);

/// Solve sum_j x_j * columns[j] = target exactly. Empty combination is a valid
/// answer for a zero target. Returns nullopt when the target is outside the span.
std::optional<ScalarVec> solve_in_span(const std::vector<ScalarVec>& columns, const ScalarVec& target);

/// Basis of the null space of the matrix with the given columns.
std::vector<ScalarVec> kernel_of_columns(const std::vector<ScalarVec>& columns);

/// Exact inverse of a square matrix; throws std::domain_error if singular.
ScalarMatrix invert(const ScalarMatrix& m);

}  // namespace octig
