#pragma once

#include <string>

#include "sflow/flow_network.hpp"

namespace sflow {

/// Combinatorial description of the voids of a complex embedded in
/// codimension one.  Supplied as input and validated, never derived from
/// coordinates.  `sides[i]` holds the voids on which simplex i is positively
/// and negatively oriented; equal entries mean the simplex touches one void
/// only.  The source void's boundary is partitioned by the supports of two
/// unit flows with boundaries -gamma and +gamma.
struct VoidData {
    int void_count = 0;
    int unbounded_index = 0;
    std::vector<std::pair<int, int>> sides;
    int source_void = 0;
    std::vector<int> gamma1_support;
    std::vector<int> gamma2_support;

    bool operator==(const VoidData& other) const = default;
};

struct DualEdge {
    int from = 0;
    int to = 0;
    int simplex = -1;  // -1 marks the closing (t*, s*) edge
};

/// Directed dual graph: one vertex per void with the source void split into
/// s* and t*, one edge per d-simplex from its negative to its positive side,
/// plus the unbounded closing edge.
struct DualGraph {
    int vertex_count = 0;
    int s_star = 0;
    int t_star = 0;
    std::vector<DualEdge> edges;  // simplex order, closing edge last
    std::vector<std::string> labels;
};

/// Signed sum of the d-simplices bounding a void (a cycle for valid data).
Chain void_boundary_chain(const FlowNetwork& net, const VoidData& voids, int v);

void validate_voids(const FlowNetwork& net, const VoidData& voids);

DualGraph build_dual(const FlowNetwork& net, const VoidData& voids);

/// Maximum flow as a shortest-path computation in the dual graph: distances
/// from s* under the capacity weights are a tight potential, and the flow is
/// recovered from distance differences across each simplex.  Each dual edge
/// also carries a zero-weight reverse arc so the recovered flow is
/// non-negative.
FlowResult max_flow_shortest_path(const FlowNetwork& net, const VoidData& voids);

struct EmbeddedCut {
    CutResult cut;
    std::vector<int> combinatorial_cut;  // support of the unit dual flow
    Rational combinatorial_weight;
    bool unit_capacities = false;
};

/// Minimum cut as a min-cost unit flow from s* to t* in the dual graph.
/// With unit capacities the optimum is integral and its support is a minimum
/// directed combinatorial cut.
EmbeddedCut min_cut_via_min_cost_flow(const FlowNetwork& net, const VoidData& voids,
                                      const std::vector<Rational>& weights,
                                      bool unit_capacities);

}  // namespace sflow
