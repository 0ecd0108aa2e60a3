#include "sflow/chain_complex.hpp"

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"

namespace sflow {

const SparseMatrix& ChainComplexData::boundary(int k) const {
    if (k < 1 || k > top_dim) throw ValidationError("boundary dimension out of range");
    return boundaries[k - 1];
}

void ChainComplexData::validate() const {
    if (top_dim < 0) throw ValidationError("negative top dimension");
    if (static_cast<int>(sizes.size()) != top_dim + 1) {
        throw ValidationError("basis size list does not match top dimension");
    }
    if (static_cast<int>(boundaries.size()) != top_dim) {
        throw ValidationError("boundary matrix list does not match top dimension");
    }
    for (int k = 1; k <= top_dim; ++k) {
        const SparseMatrix& b = boundary(k);
        if (b.rows() != sizes[k - 1] || b.cols() != sizes[k]) {
            throw ValidationError("boundary matrix shape mismatch at dimension " +
                                  std::to_string(k));
        }
    }
    for (int k = 1; k + 1 <= top_dim; ++k) {
        if (!boundary(k).multiply(boundary(k + 1)).is_zero()) {
            throw ValidationError("boundary composition is nonzero at dimension " +
                                  std::to_string(k + 1));
        }
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != top_dim + 1) {
            throw ValidationError("label list does not match top dimension");
        }
        for (int k = 0; k <= top_dim; ++k) {
            if (static_cast<int>(labels[k].size()) != sizes[k]) {
                throw ValidationError("label count mismatch at dimension " + std::to_string(k));
            }
        }
    }
}

std::string ChainComplexData::label(int dim, int index) const {
    if (!labels.empty() && dim < static_cast<int>(labels.size()) &&
        index < static_cast<int>(labels[dim].size())) {
        return labels[dim][index];
    }
    return "c" + std::to_string(dim) + "_" + std::to_string(index);
}

bool ChainComplexData::operator==(const ChainComplexData& other) const {
    return top_dim == other.top_dim && sizes == other.sizes &&
           boundaries == other.boundaries && labels == other.labels;
}

ChainComplexData make_chain_complex(int top_dim, std::vector<int> sizes,
                                    std::vector<SparseMatrix> boundaries,
                                    std::vector<std::vector<std::string>> labels) {
    ChainComplexData cx;
    cx.top_dim = top_dim;
    cx.sizes = std::move(sizes);
    cx.boundaries = std::move(boundaries);
    cx.labels = std::move(labels);
    cx.validate();
    return cx;
}

Chain apply_boundary(const ChainComplexData& cx, const Chain& chain) {
    if (chain.dimension < 1 || chain.dimension > cx.top_dim) {
        throw ValidationError("apply_boundary needs dimension between 1 and the top dimension");
    }
    if (static_cast<int>(chain.coefficients.size()) != cx.sizes[chain.dimension]) {
        throw ValidationError("chain length mismatch");
    }
    return Chain(chain.dimension - 1, cx.boundary(chain.dimension).apply(chain.coefficients));
}

Cochain apply_coboundary(const ChainComplexData& cx, const Cochain& cochain) {
    if (cochain.dimension < 0 || cochain.dimension > cx.top_dim - 1) {
        throw ValidationError("apply_coboundary needs dimension between 0 and top dimension - 1");
    }
    if (static_cast<int>(cochain.coefficients.size()) != cx.sizes[cochain.dimension]) {
        throw ValidationError("cochain length mismatch");
    }
    return Cochain(cochain.dimension + 1,
                   cx.boundary(cochain.dimension + 1).apply_transpose(cochain.coefficients));
}

bool is_null_homologous(const ChainComplexData& cx, const Chain& z,
                        const std::optional<std::set<int>>& restrict_to) {
    if (z.dimension != cx.top_dim - 1) {
        throw ValidationError("null-homology test expects a codimension-one chain");
    }
    if (static_cast<int>(z.coefficients.size()) != cx.sizes[z.dimension]) {
        throw ValidationError("chain length mismatch");
    }
    if (z.dimension >= 1) {
        if (!apply_boundary(cx, z).is_zero()) {
            throw ValidationError("null-homology test requires a cycle");
        }
    }
    const SparseMatrix& full = cx.boundary(cx.top_dim);
    if (!restrict_to.has_value()) {
        return solve_linear(full, z.coefficients).has_value();
    }
    std::vector<int> cols(restrict_to->begin(), restrict_to->end());
    for (int c : cols) {
        if (c < 0 || c >= full.cols()) throw ValidationError("restriction index out of range");
    }
    return solve_linear(full.select_cols(cols), z.coefficients).has_value();
}

}  // namespace sflow
