#include "sflow/flow_network.hpp"

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"

namespace sflow {

FlowNetwork make_network(const ChainComplexData& cx, std::vector<Rational> capacities,
                         Chain gamma) {
    cx.validate();
    const int d = cx.top_dim;
    if (d < 1) throw ValidationError("flow network needs top dimension at least one");
    const int n_d = cx.sizes[d];
    if (static_cast<int>(capacities.size()) != n_d) {
        throw ValidationError("capacity vector length mismatch");
    }
    for (const auto& c : capacities) {
        if (c < 0) throw ValidationError("negative capacity");
    }
    if (gamma.dimension != d - 1) {
        throw ValidationError("gamma must have dimension one below the top");
    }
    if (static_cast<int>(gamma.coefficients.size()) != cx.sizes[d - 1]) {
        throw ValidationError("gamma length mismatch");
    }
    if (gamma.is_zero()) {
        throw ValidationError("gamma is zero; the flow value would be meaningless");
    }
    if (d - 1 >= 1 && !apply_boundary(cx, gamma).is_zero()) {
        throw ValidationError("gamma is not a cycle");
    }
    if (!solve_linear(cx.boundary(d), gamma.coefficients)) {
        throw ValidationError("gamma is not null-homologous");
    }

    std::vector<Rational> sigma_column(gamma.coefficients.size());
    for (size_t i = 0; i < sigma_column.size(); ++i) sigma_column[i] = -gamma.coefficients[i];

    ChainComplexData augmented = cx;
    augmented.sizes[d] = n_d + 1;
    augmented.boundaries[d - 1] = cx.boundary(d).with_appended_column(sigma_column);
    if (!augmented.labels.empty()) augmented.labels[d].push_back("Sigma");
    augmented.validate();

    FlowNetwork net;
    net.complex = std::move(augmented);
    net.base = cx;
    net.capacities = std::move(capacities);
    net.gamma = std::move(gamma);
    net.sigma_index = n_d;
    return net;
}

bool verify_flow(const FlowNetwork& net, const Chain& flow, const Rational& value) {
    const int d = net.top_dim();
    if (flow.dimension != d) return false;
    if (static_cast<int>(flow.coefficients.size()) != net.real_count()) return false;
    for (int i = 0; i < net.real_count(); ++i) {
        if (flow.coefficients[i] < 0 || flow.coefficients[i] > net.capacities[i]) return false;
    }
    const auto boundary = net.real_boundary().apply(flow.coefficients);
    for (size_t i = 0; i < boundary.size(); ++i) {
        if (boundary[i] != value * net.gamma.coefficients[i]) return false;
    }
    return true;
}

}  // namespace sflow
