#pragma once

#include <set>

#include "sflow/chain_complex.hpp"

namespace sflow {

/// A simplicial flow network: a complex of top dimension d, non-negative
/// capacities on the d-simplices, and a null-homologous (d-1)-cycle gamma.
/// Construction appends a basis element Sigma to the top chain group with
/// boundary -gamma and unbounded capacity, closing every gamma-flow into a
/// circulation.
struct FlowNetwork {
    ChainComplexData complex;          // augmented; Sigma is the last d-basis element
    ChainComplexData base;             // the same complex without Sigma
    std::vector<Rational> capacities;  // real d-simplices only
    Chain gamma;                       // dimension d-1
    int sigma_index = 0;               // == number of real d-simplices

    int top_dim() const { return complex.top_dim; }
    int real_count() const { return sigma_index; }
    const SparseMatrix& boundary() const { return complex.boundary(complex.top_dim); }
    const SparseMatrix& real_boundary() const { return base.boundary(base.top_dim); }
};

/// Validates and augments: gamma must be a nonzero null-homologous cycle of
/// dimension d-1 and capacities must be non-negative.
FlowNetwork make_network(const ChainComplexData& cx, std::vector<Rational> capacities,
                         Chain gamma);

/// A d-chain on the real simplices with boundary equal to value * gamma.
struct FlowResult {
    Chain flow;
    Rational value;
};

/// Output of the minimum cut program: the unit gamma-cut cochain, its
/// coboundary on the augmented basis, the directed combinatorial cut read
/// off the negative coboundary entries, and the objective value.
struct CutResult {
    Cochain cochain;
    Cochain coboundary;
    std::set<int> directed_cut;
    Rational value;
    std::vector<Rational> y_d;  // dual capacity block, augmented length
};

/// True iff boundary(flow) = value * gamma exactly and all capacities hold.
bool verify_flow(const FlowNetwork& net, const Chain& flow, const Rational& value);

}  // namespace sflow
