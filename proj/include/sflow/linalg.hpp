#pragma once

#include <optional>
#include <vector>

#include "sflow/sparse_matrix.hpp"

namespace sflow {

/// Exact Gaussian elimination.  Pivots are chosen deterministically: columns
/// left to right, within a column the lowest-index unused row with a nonzero
/// entry, so solutions and kernel bases are reproducible.
std::optional<std::vector<Rational>> solve_linear(const SparseMatrix& matrix,
                                                  const std::vector<Rational>& rhs);

/// Basis of the exact null space; empty iff the columns are independent.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& matrix);

int rank(const SparseMatrix& matrix);

}  // namespace sflow
