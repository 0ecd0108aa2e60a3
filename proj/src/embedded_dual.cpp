#include "sflow/embedded_dual.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"

namespace sflow {

namespace {

// s*/t* handling: plain voids first (increasing index, source omitted), then
// the two halves of the split source void.
struct VertexMap {
    int void_count;
    int source;
    int s_star;
    int t_star;

    int plain(int v) const { return v < source ? v : v - 1; }
};

VertexMap make_vertex_map(const VoidData& voids) {
    VertexMap map{};
    map.void_count = voids.void_count;
    map.source = voids.source_void;
    map.s_star = voids.void_count - 1;
    map.t_star = voids.void_count;
    return map;
}

}  // namespace

Chain void_boundary_chain(const FlowNetwork& net, const VoidData& voids, int v) {
    Chain out = Chain::zero(net.top_dim(), net.real_count());
    for (int i = 0; i < net.real_count(); ++i) {
        const auto [pos, neg] = voids.sides[i];
        if (pos == v && neg != v) out.coefficients[i] = Rational(1);
        if (neg == v && pos != v) out.coefficients[i] = Rational(-1);
    }
    return out;
}

void validate_voids(const FlowNetwork& net, const VoidData& voids) {
    if (voids.void_count < 2) {
        throw ValidationError("void data needs at least the source and unbounded voids");
    }
    if (voids.unbounded_index < 0 || voids.unbounded_index >= voids.void_count ||
        voids.source_void < 0 || voids.source_void >= voids.void_count) {
        throw ValidationError("void index out of range");
    }
    if (static_cast<int>(voids.sides.size()) != net.real_count()) {
        throw ValidationError("void side list length mismatch");
    }
    for (const auto& [pos, neg] : voids.sides) {
        if (pos < 0 || pos >= voids.void_count || neg < 0 || neg >= voids.void_count) {
            throw ValidationError("void index out of range");
        }
    }

    for (int v = 0; v < voids.void_count; ++v) {
        const Chain bv = void_boundary_chain(net, voids, v);
        const Chain image(net.top_dim() - 1, net.real_boundary().apply(bv.coefficients));
        if (!image.is_zero()) {
            throw ValidationError("void " + std::to_string(v) + " boundary is not a cycle");
        }
    }

    std::set<int> support1(voids.gamma1_support.begin(), voids.gamma1_support.end());
    std::set<int> support2(voids.gamma2_support.begin(), voids.gamma2_support.end());
    if (support1.size() != voids.gamma1_support.size() ||
        support2.size() != voids.gamma2_support.size()) {
        throw ValidationError("duplicate index in a flow support");
    }
    std::set<int> boundary_of_source;
    for (int i = 0; i < net.real_count(); ++i) {
        const auto [pos, neg] = voids.sides[i];
        if (pos == voids.source_void && neg == voids.source_void) {
            throw ValidationError("simplex " + std::to_string(i) +
                                  " touches the source void on both sides");
        }
        if (pos == voids.source_void || neg == voids.source_void) {
            boundary_of_source.insert(i);
        }
    }
    for (int i : support1) {
        if (support2.count(i)) {
            throw ValidationError("flow supports are not disjoint");
        }
    }
    std::set<int> joined = support1;
    joined.insert(support2.begin(), support2.end());
    if (joined != boundary_of_source) {
        throw ValidationError("flow supports do not partition the source void boundary");
    }

    const Chain source_boundary = void_boundary_chain(net, voids, voids.source_void);
    Chain g1 = Chain::zero(net.top_dim(), net.real_count());
    Chain g2 = Chain::zero(net.top_dim(), net.real_count());
    for (int i : support1) g1.coefficients[i] = source_boundary.coefficients[i];
    for (int i : support2) g2.coefficients[i] = source_boundary.coefficients[i];
    const auto b1 = net.real_boundary().apply(g1.coefficients);
    const auto b2 = net.real_boundary().apply(g2.coefficients);
    for (size_t i = 0; i < b1.size(); ++i) {
        if (b1[i] != -net.gamma.coefficients[i]) {
            throw ValidationError("first unit flow does not have boundary -gamma");
        }
    }
    for (size_t i = 0; i < b2.size(); ++i) {
        if (b2[i] != net.gamma.coefficients[i]) {
            throw ValidationError("second unit flow does not have boundary gamma");
        }
    }
}

DualGraph build_dual(const FlowNetwork& net, const VoidData& voids) {
    validate_voids(net, voids);
    const VertexMap map = make_vertex_map(voids);
    std::set<int> support1(voids.gamma1_support.begin(), voids.gamma1_support.end());

    DualGraph dual;
    dual.vertex_count = voids.void_count + 1;
    dual.s_star = map.s_star;
    dual.t_star = map.t_star;
    auto vertex_of = [&](int void_index, int simplex) {
        if (void_index != voids.source_void) return map.plain(void_index);
        return support1.count(simplex) ? map.s_star : map.t_star;
    };
    for (int i = 0; i < net.real_count(); ++i) {
        const auto [pos, neg] = voids.sides[i];
        dual.edges.push_back({vertex_of(neg, i), vertex_of(pos, i), i});
    }
    dual.edges.push_back({map.t_star, map.s_star, -1});

    for (int v = 0; v < voids.void_count; ++v) {
        if (v != voids.source_void) dual.labels.push_back("void" + std::to_string(v));
    }
    dual.labels.push_back("s*");
    dual.labels.push_back("t*");
    return dual;
}

namespace {

struct Arc {
    int to;
    Rational weight;
};

// Dijkstra with exact weights; unreachable vertices keep distance zero,
// which is feasible because no edge joins them to the reached set.
std::vector<Rational> dijkstra(int n, const std::vector<std::vector<Arc>>& adjacency, int source,
                               std::vector<bool>* reached_out = nullptr) {
    std::vector<Rational> dist(n, Rational(0));
    std::vector<bool> reached(n, false);
    using Item = std::pair<Rational, int>;
    auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
    std::vector<bool> settled(n, false);
    dist[source] = Rational(0);
    reached[source] = true;
    queue.push({Rational(0), source});
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = true;
        for (const Arc& arc : adjacency[u]) {
            const Rational candidate = d + arc.weight;
            if (!reached[arc.to] || candidate < dist[arc.to]) {
                reached[arc.to] = true;
                dist[arc.to] = candidate;
                queue.push({candidate, arc.to});
            }
        }
    }
    if (reached_out) *reached_out = reached;
    return dist;
}

}  // namespace

FlowResult max_flow_shortest_path(const FlowNetwork& net, const VoidData& voids) {
    const DualGraph dual = build_dual(net, voids);
    std::vector<std::vector<Arc>> adjacency(dual.vertex_count);
    for (const DualEdge& e : dual.edges) {
        if (e.simplex < 0) continue;  // the closing edge has no capacity constraint
        adjacency[e.from].push_back({e.to, net.capacities[e.simplex]});
        adjacency[e.to].push_back({e.from, Rational(0)});  // encodes f >= 0
    }
    std::vector<bool> reached;
    const auto dist = dijkstra(dual.vertex_count, adjacency, dual.s_star, &reached);
    if (!reached[dual.t_star]) {
        throw ValidationError("t* is unreachable in the dual graph");
    }

    FlowResult out;
    out.flow = Chain::zero(net.top_dim(), net.real_count());
    for (const DualEdge& e : dual.edges) {
        if (e.simplex < 0) continue;
        out.flow.coefficients[e.simplex] = dist[e.to] - dist[e.from];
    }
    out.value = dist[dual.t_star];
    if (!verify_flow(net, out.flow, out.value)) {
        throw Error("dual shortest-path flow failed verification");
    }
    return out;
}

namespace {

struct McfArc {
    int to;
    std::optional<Rational> capacity;  // nullopt = unbounded
    Rational flow;
    Rational cost;
    int partner;  // index of the reverse arc
};

std::optional<Rational> residual_capacity(const McfArc& arc) {
    if (!arc.capacity) return std::nullopt;
    return *arc.capacity - arc.flow;
}

}  // namespace

EmbeddedCut min_cut_via_min_cost_flow(const FlowNetwork& net, const VoidData& voids,
                                      const std::vector<Rational>& weights,
                                      bool unit_capacities) {
    if (static_cast<int>(weights.size()) != net.real_count()) {
        throw ValidationError("weight vector length mismatch");
    }
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError("negative weight");
    }
    const DualGraph dual = build_dual(net, voids);
    const int n = dual.vertex_count;

    // Arc pairs per simplex edge; the closing edge is modeled by the demand.
    std::vector<std::vector<int>> out_arcs(n);
    std::vector<McfArc> arcs;
    std::vector<int> arc_of_simplex(net.real_count(), -1);
    for (const DualEdge& e : dual.edges) {
        if (e.simplex < 0) continue;
        const int forward = static_cast<int>(arcs.size());
        std::optional<Rational> cap =
            unit_capacities ? std::optional<Rational>(Rational(1)) : std::nullopt;
        arcs.push_back({e.to, cap, Rational(0), weights[e.simplex], forward + 1});
        arcs.push_back({e.from, Rational(0), Rational(0), -weights[e.simplex], forward});
        out_arcs[e.from].push_back(forward);
        out_arcs[e.to].push_back(forward + 1);
        arc_of_simplex[e.simplex] = forward;
    }

    // Successive shortest paths with potentials; all costs start non-negative.
    std::vector<Rational> potential(n, Rational(0));
    Rational remaining(1);
    while (remaining > 0) {
        using Item = std::pair<Rational, int>;
        auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
        std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
        std::vector<std::optional<Rational>> dist(n);
        std::vector<int> parent_arc(n, -1);
        std::vector<bool> settled(n, false);
        dist[dual.s_star] = Rational(0);
        queue.push({Rational(0), dual.s_star});
        while (!queue.empty()) {
            auto [d, u] = queue.top();
            queue.pop();
            if (settled[u]) continue;
            settled[u] = true;
            for (int idx : out_arcs[u]) {
                const McfArc& arc = arcs[idx];
                const auto slack = residual_capacity(arc);
                if (slack && *slack <= 0) continue;
                const Rational reduced = arc.cost + potential[u] - potential[arc.to];
                const Rational candidate = d + reduced;
                if (!dist[arc.to] || candidate < *dist[arc.to]) {
                    dist[arc.to] = candidate;
                    parent_arc[arc.to] = idx;
                    queue.push({candidate, arc.to});
                }
            }
        }
        if (!dist[dual.t_star]) {
            throw ValidationError(
                "no unit flow from s* to t*: the dual graph is inconsistent with a "
                "null-homologous gamma");
        }
        for (int v = 0; v < n; ++v) {
            potential[v] += dist[v] ? std::min(*dist[v], *dist[dual.t_star])
                                    : *dist[dual.t_star];
        }
        Rational push = remaining;
        for (int v = dual.t_star; v != dual.s_star;) {
            const McfArc& arc = arcs[parent_arc[v]];
            const auto slack = residual_capacity(arc);
            if (slack && *slack < push) push = *slack;
            v = arcs[arc.partner].to;
        }
        for (int v = dual.t_star; v != dual.s_star;) {
            McfArc& arc = arcs[parent_arc[v]];
            arc.flow += push;
            arcs[arc.partner].flow -= push;
            v = arcs[arc.partner].to;
        }
        remaining -= push;
    }

    std::vector<Rational> dual_flow(net.real_count(), Rational(0));
    Rational total_cost(0);
    for (int i = 0; i < net.real_count(); ++i) {
        dual_flow[i] = arcs[arc_of_simplex[i]].flow;
        total_cost += weights[i] * dual_flow[i];
    }

    // Pull the flow back to a cochain: delta(pbar) must equal the dual flow
    // with a one in the Sigma slot.  This module's convention orients Sigma
    // with boundary +gamma; the network stores -gamma, so the appended column
    // is negated here.
    const SparseMatrix augmented = net.real_boundary().with_appended_column(net.gamma.coefficients);
    std::vector<Rational> target = dual_flow;
    target.push_back(Rational(1));
    const auto pbar = solve_linear(augmented.transpose(), target);
    if (!pbar) {
        throw Error("dual unit flow is not a coboundary; void data is inconsistent");
    }

    EmbeddedCut out;
    out.unit_capacities = unit_capacities;
    std::vector<Rational> p(pbar->size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = -(*pbar)[i];
    out.cut.cochain = Cochain(net.top_dim() - 1, std::move(p));
    out.cut.coboundary =
        Cochain(net.top_dim(), net.boundary().apply_transpose(out.cut.cochain.coefficients));
    for (int j = 0; j < net.real_count(); ++j) {
        if (out.cut.coboundary.coefficients[j] < 0) out.cut.directed_cut.insert(j);
    }
    out.cut.value = total_cost;
    out.cut.y_d.assign(net.real_count() + 1, Rational(0));
    for (int j = 0; j < net.real_count(); ++j) {
        if (out.cut.coboundary.coefficients[j] < 0) {
            out.cut.y_d[j] = -out.cut.coboundary.coefficients[j];
        }
    }
    for (int j = 0; j < net.real_count(); ++j) {
        if (dual_flow[j] != 0) {
            out.combinatorial_cut.push_back(j);
            out.combinatorial_weight += weights[j];
        }
    }
    return out;
}

}  // namespace sflow
