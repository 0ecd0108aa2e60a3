#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sflow/embedded_dual.hpp"
#include "sflow/errors.hpp"
#include "sflow/flow_lp.hpp"
#include "sflow/generators.hpp"

using namespace sflow;

TEST_CASE("dual graph of the octahedron") {
    const auto oct = gen_octahedron();
    const auto dual = build_dual(oct.network, *oct.voids);
    CHECK(dual.vertex_count == 3);  // beta_2 + 2 after the split
    CHECK(dual.edges.size() == 9);  // one per triangle plus the closing edge
    CHECK(dual.labels.back() == "t*");
    const auto& closing = dual.edges.back();
    CHECK(closing.simplex == -1);
    CHECK(closing.from == dual.t_star);
    CHECK(closing.to == dual.s_star);
    // Upper triangles run into t*, lower triangles leave s*.
    for (const auto& e : dual.edges) {
        if (e.simplex < 0) continue;
        const auto& upper = oct.index_sets.at("upper_triangles");
        if (std::find(upper.begin(), upper.end(), e.simplex) != upper.end()) {
            CHECK(e.to == dual.t_star);
        } else {
            CHECK(e.from == dual.s_star);
        }
    }
}

TEST_CASE("dual graph of the planar four-cycle") {
    const auto planar = gen_planar_cycle4();
    const auto dual = build_dual(planar.network, *planar.voids);
    CHECK(dual.vertex_count == 3);
    CHECK(dual.edges.size() == 5);
}

TEST_CASE("void validation rejects inconsistent data") {
    const auto oct = gen_octahedron();

    auto overlapping = *oct.voids;
    overlapping.gamma1_support.push_back(overlapping.gamma2_support.front());
    CHECK_THROWS_WITH_AS(build_dual(oct.network, overlapping),
                         "flow supports are not disjoint", ValidationError);

    auto not_partition = *oct.voids;
    not_partition.gamma1_support.pop_back();
    CHECK_THROWS_WITH_AS(build_dual(oct.network, not_partition),
                         "flow supports do not partition the source void boundary",
                         ValidationError);

    auto swapped = *oct.voids;
    std::swap(swapped.gamma1_support, swapped.gamma2_support);
    CHECK_THROWS_WITH_AS(build_dual(oct.network, swapped),
                         "first unit flow does not have boundary -gamma", ValidationError);

    auto broken_cycle = *oct.voids;
    broken_cycle.sides[0] = {broken_cycle.sides[0].second, broken_cycle.sides[0].first};
    CHECK_THROWS_AS(build_dual(oct.network, broken_cycle), ValidationError);
}

TEST_CASE("shortest-path flow equals the linear program") {
    const auto oct = gen_octahedron();
    const auto flow = max_flow_shortest_path(oct.network, *oct.voids);
    CHECK(flow.value == 2);
    CHECK(flow.value == max_flow_lp(oct.network).value);
    CHECK(verify_flow(oct.network, flow.flow, flow.value));

    const auto planar = gen_planar_cycle4();
    const auto planar_flow = max_flow_shortest_path(planar.network, *planar.voids);
    CHECK(planar_flow.value == 2);
    CHECK(planar_flow.value == max_flow_lp(planar.network).value);
}

TEST_CASE("zero-capacity bottlenecks block the dual paths") {
    auto planar = gen_planar_cycle4();
    // One zero-capacity edge on each side path.
    std::vector<Rational> caps = planar.network.capacities;
    caps[planar.index_sets.at("upper_path")[0]] = 0;
    caps[planar.index_sets.at("lower_path")[1]] = 0;
    const auto net = make_network(planar.network.base, caps, planar.gamma);
    const auto flow = max_flow_shortest_path(net, *planar.voids);
    CHECK(flow.value == 0);
    CHECK(max_flow_lp(net).value == 0);
}

TEST_CASE("dijkstra distances agree with a Bellman-Ford oracle") {
    const auto oct = gen_octahedron();
    const auto dual = build_dual(oct.network, *oct.voids);
    std::vector<std::tuple<int, int, Rational>> arcs;
    for (const auto& e : dual.edges) {
        if (e.simplex < 0) continue;
        arcs.emplace_back(e.from, e.to, oct.network.capacities[e.simplex]);
        arcs.emplace_back(e.to, e.from, Rational(0));
    }
    const auto reference = sflow::testing::bellman_ford(dual.vertex_count, arcs, dual.s_star);
    REQUIRE(reference[dual.t_star].has_value());
    const auto flow = max_flow_shortest_path(oct.network, *oct.voids);
    CHECK(flow.value == *reference[dual.t_star]);
}

TEST_CASE("min-cost unit flow recovers cuts in both modes") {
    const auto oct = gen_octahedron();
    const std::vector<Rational> unit(8, Rational(1));

    const auto combinatorial = min_cut_via_min_cost_flow(oct.network, *oct.voids, unit, true);
    CHECK(combinatorial.combinatorial_weight == 2);
    CHECK(combinatorial.combinatorial_cut.size() == 2);
    const auto brute = brute_min_combinatorial_cut(oct.network, unit, 3);
    CHECK(combinatorial.combinatorial_weight == brute.weight);
    std::set<int> cut_set(combinatorial.combinatorial_cut.begin(),
                          combinatorial.combinatorial_cut.end());
    CHECK(verify_directed_combinatorial_cut(oct.network, cut_set));

    const auto topological = min_cut_via_min_cost_flow(oct.network, *oct.voids, unit, false);
    CHECK(topological.cut.value == min_cut_lp(oct.network).value);
    CHECK(verify_gamma_cut(oct.network, topological.cut.cochain));

    const auto planar = gen_planar_cycle4();
    const auto planar_cut = min_cut_via_min_cost_flow(planar.network, *planar.voids,
                                                      std::vector<Rational>(4, Rational(1)), true);
    CHECK(planar_cut.combinatorial_weight == 2);

    // A free path through the dual graph gives a zero-cost cut.
    std::vector<Rational> free_weights(8, Rational(1));
    for (int i : oct.index_sets.at("upper_triangles")) free_weights[i] = 0;
    free_weights[oct.index_sets.at("lower_triangles")[0]] = 0;
    const auto free_cut = min_cut_via_min_cost_flow(oct.network, *oct.voids, free_weights, true);
    CHECK(free_cut.cut.value == 0);
}

TEST_CASE("module boundary fixes the sigma sign convention") {
    // Inside the embedded module sigma bounds +gamma; the network stores
    // -gamma.  The returned cochain must match the network convention.
    const auto oct = gen_octahedron();
    const auto cut = min_cut_via_min_cost_flow(oct.network, *oct.voids,
                                               std::vector<Rational>(8, Rational(1)), false);
    CHECK(inner_product(cut.cut.cochain, oct.gamma) == -1);
    CHECK(cut.cut.coboundary.coefficients[oct.network.sigma_index] == 1);
    for (int j : cut.combinatorial_cut) {
        CHECK(cut.cut.coboundary.coefficients[j] < 0);
    }
}

TEST_CASE("capacity perturbations keep all three routes in agreement") {
    const auto oct = gen_octahedron();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        std::vector<Rational> caps(8);
        std::mt19937_64 rng(seed);
        for (auto& c : caps) c = Rational(1) + Rational(static_cast<int>(rng() % 8)) / 8;
        const auto net = make_network(oct.network.base, caps, oct.gamma);
        const auto lp_value = max_flow_lp(net).value;
        CHECK(max_flow_shortest_path(net, *oct.voids).value == lp_value);
        CHECK(min_cut_via_min_cost_flow(net, *oct.voids, caps, false).cut.value ==
              min_cut_lp(net).value);
    }
}
