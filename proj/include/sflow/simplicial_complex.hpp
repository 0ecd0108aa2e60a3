#pragma once

#include <map>
#include <string>
#include <vector>

#include "sflow/chain_complex.hpp"
#include "sflow/sparse_matrix.hpp"

namespace sflow {

/// Abstract simplicial complex on vertices 0..n-1.  Simplices are strictly
/// increasing vertex tuples; the canonical orientation is the increasing
/// order, and individual simplices may carry a sign override that flips
/// their orientation without relabeling vertices.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count,
                      std::vector<std::vector<std::vector<int>>> simplices_by_dim);

    /// Downward closure of a set of top simplices; faces are generated and
    /// sorted lexicographically per dimension.
    static SimplicialComplex from_top_simplices(int vertex_count,
                                                const std::vector<std::vector<int>>& top_simplices);

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    const std::vector<std::vector<int>>& simplices(int dim) const;
    int count(int dim) const;

    /// Index of a simplex within its dimension, -1 when absent.
    int index_of(int dim, const std::vector<int>& simplex) const;

    void set_orientation(int dim, int index, int orientation_sign);
    int orientation(int dim, int index) const;
    const std::map<std::pair<int, int>, int>& orientation_overrides() const {
        return orientation_overrides_;
    }

    /// Matrix of the boundary operator C_k -> C_{k-1} with the alternating
    /// face signs, adjusted by orientation overrides.  Throws ValidationError
    /// naming the missing face if the complex is not downward closed.
    SparseMatrix boundary_matrix(int k) const;

    ChainComplexData compile() const;

    static std::string simplex_label(const std::vector<int>& simplex);

    bool operator==(const SimplicialComplex& other) const = default;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<std::vector<int>>> simplices_;  // [dim][index] -> vertex tuple
    std::map<std::pair<int, int>, int> orientation_overrides_;
};

}  // namespace sflow
