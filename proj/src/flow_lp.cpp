#include "sflow/flow_lp.hpp"

#include <algorithm>
#include <queue>

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"

namespace sflow {

FlowResult max_flow_lp(const FlowNetwork& net) {
    const int d = net.top_dim();
    const SparseMatrix& bd = net.boundary();
    const int n_aug = bd.cols();

    LinearProgram lp;
    lp.sense = Sense::Maximize;
    lp.objective.assign(n_aug, Rational(0));
    lp.objective[net.sigma_index] = Rational(1);
    for (auto& row : bd.to_dense()) {
        lp.constraints.push_back({std::move(row), Relation::Equal, Rational(0)});
    }
    lp.bounds.resize(n_aug);
    for (int j = 0; j < net.real_count(); ++j) {
        lp.bounds[j] = VariableBounds::box(Rational(0), net.capacities[j]);
    }
    lp.bounds[net.sigma_index] = VariableBounds::non_negative();

    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw Error("flow program did not reach an optimum");
    }
    FlowResult out;
    out.flow = Chain(d, std::vector<Rational>(sol.primal.begin(),
                                              sol.primal.begin() + net.real_count()));
    out.value = sol.primal[net.sigma_index];
    return out;
}

CutResult min_cut_lp(const FlowNetwork& net) {
    const int d = net.top_dim();
    const SparseMatrix& bd = net.boundary();
    const int n_cochain = bd.rows();
    const int n_aug = bd.cols();

    // Variables: the cochain block (free), then one bounded dual variable per
    // augmented d-simplex.  Sigma's dual variable is pinned to zero; its
    // constraint row is the equality normalizing the cut.
    LinearProgram lp;
    lp.sense = Sense::Minimize;
    lp.objective.assign(n_cochain + n_aug, Rational(0));
    for (int j = 0; j < net.real_count(); ++j) {
        lp.objective[n_cochain + j] = net.capacities[j];
    }
    const auto dense_delta = bd.transpose().to_dense();  // row per d-simplex
    for (int sigma = 0; sigma < n_aug; ++sigma) {
        LinearConstraint con;
        con.coefficients = dense_delta[sigma];
        con.coefficients.resize(n_cochain + n_aug, Rational(0));
        con.coefficients[n_cochain + sigma] = Rational(1);
        if (sigma == net.sigma_index) {
            con.relation = Relation::Equal;
            con.rhs = Rational(1);
        } else {
            con.relation = Relation::GreaterEqual;
            con.rhs = Rational(0);
        }
        lp.constraints.push_back(std::move(con));
    }
    lp.bounds.assign(n_cochain, VariableBounds::free_variable());
    lp.bounds.resize(n_cochain + n_aug, VariableBounds::non_negative());
    lp.bounds[n_cochain + net.sigma_index] = VariableBounds::fixed(Rational(0));

    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw Error("cut program did not reach an optimum");
    }

    CutResult out;
    out.cochain = Cochain(d - 1, std::vector<Rational>(sol.primal.begin(),
                                                       sol.primal.begin() + n_cochain));
    out.coboundary = Cochain(d, bd.apply_transpose(out.cochain.coefficients));
    for (int j = 0; j < net.real_count(); ++j) {
        if (out.coboundary.coefficients[j] < 0) out.directed_cut.insert(j);
    }
    out.value = sol.objective;
    out.y_d.assign(sol.primal.begin() + n_cochain, sol.primal.end());
    return out;
}

bool verify_gamma_cut(const FlowNetwork& net, const Cochain& p) {
    if (p.dimension != net.top_dim() - 1 ||
        static_cast<int>(p.coefficients.size()) != net.base.sizes[net.top_dim() - 1]) {
        throw ValidationError("cut cochain has the wrong shape");
    }
    if (inner_product(p, net.gamma) != -1) return false;
    const auto cob = net.real_boundary().apply_transpose(p.coefficients);
    std::set<int> rest;
    for (int j = 0; j < net.real_count(); ++j) {
        if (cob[j] == 0) rest.insert(j);
    }
    return !is_null_homologous(net.base, net.gamma, rest);
}

std::optional<Chain> nonnegative_bounding_chain(const FlowNetwork& net,
                                                const std::vector<int>& allowed) {
    const SparseMatrix sub = net.real_boundary().select_cols(allowed);
    std::vector<LinearConstraint> constraints;
    auto dense = sub.to_dense();
    for (int i = 0; i < sub.rows(); ++i) {
        constraints.push_back({std::move(dense[i]), Relation::Equal, net.gamma.coefficients[i]});
    }
    std::vector<VariableBounds> bounds(allowed.size(), VariableBounds::non_negative());
    auto point = feasible_point(constraints, bounds);
    if (!point) return std::nullopt;
    Chain out = Chain::zero(net.top_dim(), net.real_count());
    for (size_t i = 0; i < allowed.size(); ++i) out.coefficients[allowed[i]] = (*point)[i];
    return out;
}

bool verify_directed_combinatorial_cut(const FlowNetwork& net, const std::set<int>& cut) {
    std::vector<int> allowed;
    for (int j = 0; j < net.real_count(); ++j) {
        if (!cut.count(j)) allowed.push_back(j);
    }
    return !nonnegative_bounding_chain(net, allowed).has_value();
}

namespace {

struct SubsetNode {
    Rational weight;
    std::vector<int> subset;
};

struct SubsetOrder {
    bool operator()(const SubsetNode& a, const SubsetNode& b) const {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.subset > b.subset;  // min-heap: lexicographically smallest first
    }
};

}  // namespace

BruteCut brute_min_combinatorial_cut(const FlowNetwork& net,
                                     const std::vector<Rational>& weights,
                                     int max_subset_size) {
    const int n = net.real_count();
    if (n > 25) {
        throw GuardError("combinatorial cut search limited to 25 simplices, got " +
                         std::to_string(n));
    }
    if (static_cast<int>(weights.size()) != n) {
        throw ValidationError("weight vector length mismatch");
    }
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError("negative cut weight");
    }

    std::priority_queue<SubsetNode, std::vector<SubsetNode>, SubsetOrder> queue;
    queue.push({Rational(0), {}});
    while (!queue.empty()) {
        SubsetNode node = queue.top();
        queue.pop();
        std::set<int> rest;
        {
            std::set<int> removed(node.subset.begin(), node.subset.end());
            for (int j = 0; j < n; ++j) {
                if (!removed.count(j)) rest.insert(j);
            }
        }
        if (!is_null_homologous(net.base, net.gamma, rest)) {
            return {node.subset, node.weight};
        }
        if (static_cast<int>(node.subset.size()) >= max_subset_size) continue;
        const int start = node.subset.empty() ? 0 : node.subset.back() + 1;
        for (int j = start; j < n; ++j) {
            SubsetNode child;
            child.weight = node.weight + weights[j];
            child.subset = node.subset;
            child.subset.push_back(j);
            queue.push(std::move(child));
        }
    }
    throw GuardError("no combinatorial cut within subset size " +
                     std::to_string(max_subset_size));
}

std::optional<Cochain> find_supporting_cochain(const ChainComplexData& cx,
                                               const std::vector<int>& cut) {
    if (cut.empty()) return std::nullopt;
    const int d = cx.top_dim;
    const SparseMatrix delta = cx.boundary(d).transpose();  // n_d x n_{d-1}
    std::set<int> cut_set(cut.begin(), cut.end());
    std::vector<int> off_rows;
    for (int j = 0; j < delta.rows(); ++j) {
        if (!cut_set.count(j)) off_rows.push_back(j);
    }
    std::vector<int> all_cols(delta.cols());
    for (int c = 0; c < delta.cols(); ++c) all_cols[c] = c;

    const auto kernel = kernel_basis(delta.select(off_rows, all_cols));
    if (kernel.empty()) return std::nullopt;

    std::vector<std::vector<Rational>> images;
    std::set<int> target_support;
    for (const auto& vec : kernel) {
        auto image = delta.apply(vec);
        for (int j = 0; j < delta.rows(); ++j) {
            if (image[j] != 0) target_support.insert(j);
        }
        images.push_back(std::move(image));
    }
    if (target_support.empty()) return std::nullopt;

    // A generic combination of the kernel basis realizes the full support;
    // powers of t miss only finitely many t.
    const int guard = static_cast<int>(kernel.size() * target_support.size()) + 2;
    for (int t = 1; t <= guard; ++t) {
        std::vector<Rational> combo(delta.cols(), Rational(0));
        Rational lambda(1);
        std::vector<Rational> image(delta.rows(), Rational(0));
        for (size_t i = 0; i < kernel.size(); ++i) {
            for (int c = 0; c < delta.cols(); ++c) combo[c] += lambda * kernel[i][c];
            for (int j = 0; j < delta.rows(); ++j) image[j] += lambda * images[i][j];
            lambda *= t;
        }
        bool full = true;
        for (int j : target_support) {
            if (image[j] == 0) {
                full = false;
                break;
            }
        }
        if (full) return Cochain(d - 1, std::move(combo));
    }
    throw Error("generic combination search failed to realize the support");
}

bool tu_vertex_integrality_check(const FlowNetwork& net) {
    const CutResult cut = min_cut_lp(net);
    auto in_unit_range = [](const Rational& v) { return v == 0 || v == 1 || v == -1; };
    for (const auto& v : cut.cochain.coefficients) {
        if (!in_unit_range(v)) return false;
    }
    for (const auto& v : cut.y_d) {
        if (!in_unit_range(v)) return false;
    }
    return true;
}

Rational cut_support_weight(const FlowNetwork& net, const CutResult& cut) {
    Rational total(0);
    for (int j = 0; j < net.real_count(); ++j) {
        if (cut.coboundary.coefficients[j] != 0) total += net.capacities[j];
    }
    return total;
}

Rational cut_norm(const FlowNetwork& net, const Cochain& p) {
    const auto cob = net.real_boundary().apply_transpose(p.coefficients);
    Rational total(0);
    for (int j = 0; j < net.real_count(); ++j) {
        Rational term = cob[j] * net.capacities[j];
        total += term < 0 ? -term : term;
    }
    return total;
}

}  // namespace sflow
