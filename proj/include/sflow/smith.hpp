#pragma once

#include <vector>

#include "sflow/sparse_matrix.hpp"

namespace sflow {

/// Invariant factors d_1 | d_2 | ... of an integer matrix (positive, one per
/// nonzero diagonal entry of the Smith normal form).  Any factor > 1
/// witnesses torsion of the cokernel.  Throws ValidationError on a
/// non-integer entry.
std::vector<Integer> smith_normal_form(const SparseMatrix& matrix);

}  // namespace sflow
