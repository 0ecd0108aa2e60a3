#pragma once

#include <optional>

#include "sflow/flow_network.hpp"

namespace sflow {

/// Residual capacities of a feasible flow: forward slack c - f and backward
/// room f per real d-simplex.  Sigma keeps unbounded forward capacity and
/// backward capacity equal to the current value.
struct ResidualComplex {
    std::vector<Rational> forward;
    std::vector<Rational> backward;
    Rational sigma_backward;
};

/// Non-negative chain on the residual orientations (sigma forward, -sigma
/// backward) with boundary gamma, restricted to strictly positive residual
/// capacities.  `step` is the largest feasible increment.
struct AugmentingChain {
    std::vector<Rational> forward;
    std::vector<Rational> backward;
    Rational step;
};

struct FfIteration {
    int iteration = 0;
    Rational value;
    Chain augmented_flow;  // after the augmentation, before repair
    Chain repaired_flow;
    int half_saturated_count = 0;
    std::vector<int> saturated;  // capacity-tight simplices after repair
};

struct FfOptions {
    int iteration_cap = 0;  // 0: 1000 + 10 * n_d^2, a safety valve only
};

struct FfResult {
    FlowResult flow;
    int iterations = 0;
    std::vector<FfIteration> trace;
};

ResidualComplex residual(const FlowNetwork& net, const FlowResult& f);

/// Nothing iff no augmenting chain exists, which certifies that the flow is
/// maximum.
std::optional<AugmentingChain> find_augmenting_chain(const FlowNetwork& net,
                                                     const ResidualComplex& rc);

/// Pushes `step` units along the chain; the value strictly increases and at
/// least one residual direction saturates.
FlowResult augment(const FlowNetwork& net, const FlowResult& f, const AugmentingChain& chain);

/// Real simplices with both residual capacities strictly positive.
std::vector<int> half_saturated(const FlowNetwork& net, const FlowResult& f);

/// True iff the boundary columns of the given simplices are independent.
bool is_acyclic(const FlowNetwork& net, const std::vector<int>& simplices);

/// Pushes flow around top-dimensional cycles of the half-saturated set until
/// none remain.  Preserves the boundary and the value exactly.
FlowResult repair(const FlowNetwork& net, FlowResult f);

/// Generalized Ford-Fulkerson from the zero flow: augment, then repair, until
/// the residual complex has no augmenting chain.  Every iterate is a vertex
/// of the flow polytope, so the loop halts; the cap firing is an error, never
/// a silent truncation.
FfResult max_flow_ff(const FlowNetwork& net, const FfOptions& options = {});

}  // namespace sflow
