#pragma once

#include <optional>

#include "sflow/flow_network.hpp"
#include "sflow/lp.hpp"

namespace sflow {

/// Maximum gamma-flow via the conservation linear program: maximize the
/// Sigma coordinate of a circulation subject to capacities.
FlowResult max_flow_lp(const FlowNetwork& net);

/// Minimum cut program, solved directly as its own LP so the returned
/// solution is an explicit vertex.  The value equals max_flow_lp exactly.
CutResult min_cut_lp(const FlowNetwork& net);

/// True iff p(gamma) = -1 and gamma is not null-homologous once the support
/// of the coboundary of p is removed from the complex.
bool verify_gamma_cut(const FlowNetwork& net, const Cochain& p);

/// True iff no non-negative chain with boundary gamma is supported off the
/// given simplices.
bool verify_directed_combinatorial_cut(const FlowNetwork& net, const std::set<int>& cut);

struct BruteCut {
    std::vector<int> cut;  // sorted d-simplex indices
    Rational weight;
};

/// Exhaustive minimum-weight set of d-simplices whose removal stops gamma
/// from bounding, enumerated in (weight, lexicographic) order.  Guarded:
/// at most 25 real simplices, subsets up to max_subset_size.
BruteCut brute_min_combinatorial_cut(const FlowNetwork& net,
                                     const std::vector<Rational>& weights,
                                     int max_subset_size);

/// A cochain whose coboundary is nonzero, supported inside `cut`, and of
/// maximal support among such cochains; nothing when no such cochain exists.
std::optional<Cochain> find_supporting_cochain(const ChainComplexData& cx,
                                               const std::vector<int>& cut);

/// True iff every entry of the minimum-cut vertex solution lies in {-1,0,1}.
bool tu_vertex_integrality_check(const FlowNetwork& net);

/// Total capacity of the coboundary support (real simplices).
Rational cut_support_weight(const FlowNetwork& net, const CutResult& cut);

/// Size of a gamma-cut as the weighted one-norm of its coboundary.
Rational cut_norm(const FlowNetwork& net, const Cochain& p);

/// Constraint system whose feasible points are the non-negative chains with
/// boundary gamma supported on the given real simplices (used by the cut
/// verifier and the augmenting-chain search).
std::optional<Chain> nonnegative_bounding_chain(const FlowNetwork& net,
                                                const std::vector<int>& allowed);

}  // namespace sflow
