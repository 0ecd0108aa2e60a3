#include "sflow/ford_fulkerson.hpp"

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"
#include "sflow/lp.hpp"

namespace sflow {

ResidualComplex residual(const FlowNetwork& net, const FlowResult& f) {
    if (!verify_flow(net, f.flow, f.value)) {
        throw ValidationError("residual complex requires a feasible flow");
    }
    ResidualComplex rc;
    rc.forward.reserve(net.real_count());
    rc.backward.reserve(net.real_count());
    for (int i = 0; i < net.real_count(); ++i) {
        rc.forward.push_back(net.capacities[i] - f.flow.coefficients[i]);
        rc.backward.push_back(f.flow.coefficients[i]);
    }
    rc.sigma_backward = f.value;
    return rc;
}

std::optional<AugmentingChain> find_augmenting_chain(const FlowNetwork& net,
                                                     const ResidualComplex& rc) {
    const int n = net.real_count();
    std::vector<int> fwd, bwd;
    for (int i = 0; i < n; ++i) {
        if (rc.forward[i] > 0) fwd.push_back(i);
        if (rc.backward[i] > 0) bwd.push_back(i);
    }

    // One column per usable residual orientation; boundary of the combination
    // must equal gamma.
    const SparseMatrix& bd = net.real_boundary();
    const int rows = bd.rows();
    std::vector<std::vector<Rational>> columns(rows,
                                               std::vector<Rational>(fwd.size() + bwd.size(), Rational(0)));
    const auto dense = bd.to_dense();
    for (size_t j = 0; j < fwd.size(); ++j) {
        for (int i = 0; i < rows; ++i) columns[i][j] = dense[i][fwd[j]];
    }
    for (size_t j = 0; j < bwd.size(); ++j) {
        for (int i = 0; i < rows; ++i) columns[i][fwd.size() + j] = -dense[i][bwd[j]];
    }
    std::vector<LinearConstraint> constraints;
    for (int i = 0; i < rows; ++i) {
        constraints.push_back({std::move(columns[i]), Relation::Equal, net.gamma.coefficients[i]});
    }
    std::vector<VariableBounds> bounds(fwd.size() + bwd.size(), VariableBounds::non_negative());
    auto point = feasible_point(constraints, bounds);
    if (!point) return std::nullopt;

    AugmentingChain chain;
    chain.forward.assign(n, Rational(0));
    chain.backward.assign(n, Rational(0));
    for (size_t j = 0; j < fwd.size(); ++j) chain.forward[fwd[j]] = (*point)[j];
    for (size_t j = 0; j < bwd.size(); ++j) chain.backward[bwd[j]] = (*point)[fwd.size() + j];

    std::optional<Rational> step;
    for (int i = 0; i < n; ++i) {
        if (chain.forward[i] > 0) {
            Rational limit = rc.forward[i] / chain.forward[i];
            if (!step || limit < *step) step = limit;
        }
        if (chain.backward[i] > 0) {
            Rational limit = rc.backward[i] / chain.backward[i];
            if (!step || limit < *step) step = limit;
        }
    }
    // A chain with empty support would mean gamma = 0, which make_network rejects.
    chain.step = step.value_or(Rational(0));
    return chain;
}

FlowResult augment(const FlowNetwork& net, const FlowResult& f, const AugmentingChain& chain) {
    if (chain.step <= 0) throw ValidationError("augmentation step must be positive");
    FlowResult out = f;
    for (int i = 0; i < net.real_count(); ++i) {
        out.flow.coefficients[i] += chain.step * (chain.forward[i] - chain.backward[i]);
    }
    out.value += chain.step;
    if (!verify_flow(net, out.flow, out.value)) {
        throw Error("augmentation produced an infeasible flow");
    }
    return out;
}

std::vector<int> half_saturated(const FlowNetwork& net, const FlowResult& f) {
    std::vector<int> out;
    for (int i = 0; i < net.real_count(); ++i) {
        if (f.flow.coefficients[i] > 0 && f.flow.coefficients[i] < net.capacities[i]) {
            out.push_back(i);
        }
    }
    return out;
}

bool is_acyclic(const FlowNetwork& net, const std::vector<int>& simplices) {
    return kernel_basis(net.real_boundary().select_cols(simplices)).empty();
}

FlowResult repair(const FlowNetwork& net, FlowResult f) {
    while (true) {
        const std::vector<int> half = half_saturated(net, f);
        const auto kernel = kernel_basis(net.real_boundary().select_cols(half));
        if (kernel.empty()) return f;
        const auto& cycle = kernel.front();

        // Move along the cycle until some simplex saturates: positive
        // coefficients are limited forward, negative ones backward.
        std::optional<Rational> step;
        for (size_t j = 0; j < half.size(); ++j) {
            const int simplex = half[j];
            if (cycle[j] > 0) {
                Rational limit = (net.capacities[simplex] - f.flow.coefficients[simplex]) / cycle[j];
                if (!step || limit < *step) step = limit;
            } else if (cycle[j] < 0) {
                Rational limit = f.flow.coefficients[simplex] / -cycle[j];
                if (!step || limit < *step) step = limit;
            }
        }
        for (size_t j = 0; j < half.size(); ++j) {
            f.flow.coefficients[half[j]] += *step * cycle[j];
        }
    }
}

FfResult max_flow_ff(const FlowNetwork& net, const FfOptions& options) {
    const int n = net.real_count();
    const int cap = options.iteration_cap > 0 ? options.iteration_cap : 1000 + 10 * n * n;

    FfResult result;
    result.flow.flow = Chain::zero(net.top_dim(), n);
    result.flow.value = Rational(0);

    while (true) {
        const ResidualComplex rc = residual(net, result.flow);
        const auto chain = find_augmenting_chain(net, rc);
        if (!chain) break;
        if (result.iterations + 1 > cap) {
            throw GuardError("generalized Ford-Fulkerson exceeded " + std::to_string(cap) +
                             " iterations at value " + to_string(result.flow.value));
        }
        ++result.iterations;

        FfIteration record;
        record.iteration = result.iterations;
        const FlowResult augmented = augment(net, result.flow, *chain);
        record.augmented_flow = augmented.flow;
        result.flow = repair(net, augmented);
        record.repaired_flow = result.flow.flow;
        record.value = result.flow.value;
        record.half_saturated_count = static_cast<int>(half_saturated(net, result.flow).size());
        for (int i = 0; i < n; ++i) {
            if (net.capacities[i] > 0 && result.flow.flow.coefficients[i] == net.capacities[i]) {
                record.saturated.push_back(i);
            }
        }
        result.trace.push_back(std::move(record));
    }
    return result;
}

}  // namespace sflow
