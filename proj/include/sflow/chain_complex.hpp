#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sflow/chain.hpp"
#include "sflow/sparse_matrix.hpp"

namespace sflow {

/// A finite chain complex over the rationals: basis sizes n_0..n_d and the
/// boundary matrices that connect them.  Immutable after construction and
/// safe to share across threads.
struct ChainComplexData {
    int top_dim = 0;
    std::vector<int> sizes;                        // n_0 .. n_d
    std::vector<SparseMatrix> boundaries;          // boundaries[k-1] is d_k, k = 1..d
    std::vector<std::vector<std::string>> labels;  // per dimension, optional

    const SparseMatrix& boundary(int k) const;

    /// Checks matrix shapes and that consecutive boundaries compose to zero.
    void validate() const;

    std::string label(int dim, int index) const;

    bool operator==(const ChainComplexData& other) const;
};

ChainComplexData make_chain_complex(int top_dim, std::vector<int> sizes,
                                    std::vector<SparseMatrix> boundaries,
                                    std::vector<std::vector<std::string>> labels = {});

/// Boundary of a k-chain, 1 <= k <= top_dim.
Chain apply_boundary(const ChainComplexData& cx, const Chain& chain);

/// Coboundary of a k-cochain, 0 <= k <= top_dim - 1 (transpose action).
Cochain apply_coboundary(const ChainComplexData& cx, const Cochain& cochain);

/// True iff some x with boundary(x) = z exists, with x supported on the given
/// top-simplex indices (all of them when absent).  z must be a cycle.
bool is_null_homologous(const ChainComplexData& cx, const Chain& z,
                        const std::optional<std::set<int>>& restrict_to = std::nullopt);

}  // namespace sflow
