// Acceptance suite: every criterion runs at its stated tolerance (exact
// rational equality throughout) and prints one pass/fail line.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "oracles.hpp"
#include "sflow/embedded_dual.hpp"
#include "sflow/errors.hpp"
#include "sflow/flow_lp.hpp"
#include "sflow/ford_fulkerson.hpp"
#include "sflow/generators.hpp"
#include "sflow/io.hpp"
#include "sflow/smith.hpp"

using namespace sflow;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string label;
    Clock::time_point start = Clock::now();

    explicit Criterion(std::string text) : label(std::move(text)) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
    ~Criterion() {
        std::printf("[acceptance] %s: %s (%lld ms)\n", label.c_str(),
                    std::uncaught_exceptions() ? "FAIL" : "PASS", elapsed_ms());
        std::fflush(stdout);
    }
};

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(SFLOW_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (fgets(buffer, sizeof buffer, pipe)) output += buffer;
    return {WEXITSTATUS(pclose(pipe)), output};
}

std::vector<std::tuple<int, int, Rational>> arcs_of(const FlowNetwork& net) {
    std::vector<std::tuple<int, int, Rational>> arcs;
    const auto dense = net.real_boundary().to_dense();
    for (int e = 0; e < net.real_count(); ++e) {
        int tail = -1, head = -1;
        for (int v = 0; v < net.base.sizes[0]; ++v) {
            if (dense[v][e] == -1) tail = v;
            if (dense[v][e] == 1) head = v;
        }
        arcs.emplace_back(tail, head, net.capacities[e]);
    }
    return arcs;
}

// Shared corpus: random instances (criterion 3), graph instances (4), and
// embedded variants (5), with their optimal flows and trace-recorded runs.
struct Corpus {
    std::vector<InstanceBundle> randoms;
    std::vector<FlowResult> random_flows;
    std::vector<FfResult> random_runs;

    std::vector<InstanceBundle> graphs;  // gamma = sink - source, 5 vertices
    std::vector<FlowResult> graph_flows;

    std::vector<FlowNetwork> embedded;  // octahedron + capacity perturbations
    std::optional<VoidData> embedded_voids;
    std::vector<FlowResult> embedded_flows;

    std::vector<FfResult> extra_runs;  // named instances put through the loop

    static Corpus& get() {
        static Corpus corpus = build();
        return corpus;
    }

private:
    static Corpus build() {
        Corpus c;
        for (int i = 0; i < 100; ++i) {
            const int d = 1 + i % 2;
            const int vertices = 6 + i % 3;
            const Rational density = d == 1 ? Rational(1) / 2 : Rational(2) / 5;
            c.randoms.push_back(gen_random(9000 + i, vertices, d, density));
        }
        std::mt19937_64 rng(777);
        while (c.graphs.size() < 50) {
            std::vector<std::pair<int, int>> edges;
            std::vector<Rational> caps;
            for (int a = 0; a < 5; ++a) {
                for (int b = a + 1; b < 5; ++b) {
                    if (rng() % 2) continue;
                    const bool flip = rng() % 2;
                    edges.push_back(flip ? std::make_pair(b, a) : std::make_pair(a, b));
                    caps.push_back(Rational(1 + static_cast<int>(rng() % 7)));
                }
            }
            if (edges.empty() || edges.size() > 12) continue;
            try {
                c.graphs.push_back(gen_graph(edges, caps, 0, 4));
            } catch (const ValidationError&) {
                continue;  // sink not connected to the source; resample
            }
        }
        const auto oct = gen_octahedron();
        c.embedded_voids = oct.voids;
        c.embedded.push_back(oct.network);
        std::mt19937_64 perturb(4242);
        for (int i = 0; i < 10; ++i) {
            std::vector<Rational> caps(8);
            for (auto& cap : caps) {
                cap = Rational(1) + Rational(static_cast<int>(perturb() % 8)) / 8;
            }
            c.embedded.push_back(make_network(oct.network.base, caps, oct.gamma));
        }
        return c;
    }
};

}  // namespace

TEST_CASE("criterion 1: fractional maximum flow") {
    Criterion report("criterion 1, fractional max-flow 1/2");
    const std::string path = "/tmp/sflow_accept_md.json";
    REQUIRE(run_cli("gen md --out " + path).exit_code == 0);

    const auto lp_start = Clock::now();
    const auto lp = run_cli("maxflow " + path + " --method lp");
    const auto lp_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - lp_start).count();
    REQUIRE(lp.exit_code == 0);
    REQUIRE(Json::parse(lp.output).at("value") == "1/2");
    REQUIRE(lp_ms < 1000);

    const auto ff_start = Clock::now();
    const auto ff = run_cli("maxflow " + path + " --method ff");
    const auto ff_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - ff_start).count();
    REQUIRE(ff.exit_code == 0);
    const auto ff_doc = Json::parse(ff.output);
    REQUIRE(ff_doc.at("value") == "1/2");
    REQUIRE(ff_doc.at("iterations").get<int>() >= 1);
    REQUIRE(ff_ms < 1000);
}

TEST_CASE("criterion 2: cut gap on the wedge complex") {
    Criterion report("criterion 2, wedge cut gap 3/2 vs 2");
    const auto mdw = gen_mdw();
    const auto flow = max_flow_lp(mdw.network);
    const auto cut = min_cut_lp(mdw.network);
    REQUIRE(flow.value == Rational(3) / 2);
    REQUIRE(cut.value == Rational(3) / 2);

    const auto brute = brute_min_combinatorial_cut(
        mdw.network, std::vector<Rational>(mdw.network.real_count(), Rational(1)), 4);
    REQUIRE(brute.weight == 2);

    bool has_half = false;
    for (const auto& v : cut.cochain.coefficients) {
        if (v == Rational(1) / 2 || v == Rational(-1) / 2) has_half = true;
    }
    REQUIRE(has_half);
    REQUIRE(report.elapsed_ms() < 5000);
}

TEST_CASE("criterion 3: strong duality on the random corpus") {
    Criterion report("criterion 3, strong duality on 100 random instances");
    auto& corpus = Corpus::get();
    for (const auto& inst : corpus.randoms) {
        const auto flow = max_flow_lp(inst.network);
        const auto cut = min_cut_lp(inst.network);
        REQUIRE(flow.value == cut.value);
        const auto run = max_flow_ff(inst.network);
        REQUIRE(run.flow.value == flow.value);
        corpus.random_flows.push_back(flow);
        corpus.random_runs.push_back(run);
    }
    REQUIRE(report.elapsed_ms() < 120000);
}

TEST_CASE("criterion 4: totally unimodular graph regression") {
    Criterion report("criterion 4, integral graph regression on 50 digraphs");
    auto& corpus = Corpus::get();
    for (const auto& inst : corpus.graphs) {
        const auto flow = max_flow_lp(inst.network);
        for (const auto& v : flow.flow.coefficients) REQUIRE(is_integer(v));
        REQUIRE(is_integer(flow.value));

        const auto cut = min_cut_lp(inst.network);
        for (const auto& v : cut.cochain.coefficients) {
            REQUIRE((v == 0 || v == 1 || v == -1));
        }
        for (const auto& v : cut.y_d) {
            REQUIRE((v == 0 || v == 1 || v == -1));
        }

        const auto arcs = arcs_of(inst.network);
        REQUIRE(flow.value == sflow::testing::graph_max_flow_oracle(5, arcs, 0, 4));
        REQUIRE(cut.value == sflow::testing::graph_min_directed_cut_oracle(5, arcs, 0, 4));
        corpus.graph_flows.push_back(flow);
    }
    REQUIRE(report.elapsed_ms() < 120000);
}

TEST_CASE("criterion 5: embedded duality") {
    Criterion report("criterion 5, embedded duality on 11 instances");
    auto& corpus = Corpus::get();
    const auto& voids = *corpus.embedded_voids;
    for (const auto& net : corpus.embedded) {
        const auto lp_flow = max_flow_lp(net);
        const auto sp_flow = max_flow_shortest_path(net, voids);
        REQUIRE(sp_flow.value == lp_flow.value);

        const auto lp_cut = min_cut_lp(net);
        const auto mc_cut = min_cut_via_min_cost_flow(net, voids, net.capacities, false);
        REQUIRE(mc_cut.cut.value == lp_cut.value);

        const auto unit_cut = min_cut_via_min_cost_flow(net, voids, net.capacities, true);
        const auto brute = brute_min_combinatorial_cut(net, net.capacities, 4);
        REQUIRE(unit_cut.combinatorial_weight == brute.weight);
        corpus.embedded_flows.push_back(lp_flow);
    }
    REQUIRE(report.elapsed_ms() < 30000);
}

TEST_CASE("criterion 6: residual optimality in both directions") {
    Criterion report("criterion 6, residual optimality across the corpus");
    auto& corpus = Corpus::get();
    REQUIRE(corpus.random_flows.size() == corpus.randoms.size());
    REQUIRE(corpus.graph_flows.size() == corpus.graphs.size());

    std::vector<std::pair<const FlowNetwork*, const FlowResult*>> pool;
    const auto md = gen_md();
    const auto mdw = gen_mdw();
    const auto md_flow = max_flow_lp(md.network);
    const auto mdw_flow = max_flow_lp(mdw.network);
    pool.push_back({&md.network, &md_flow});
    pool.push_back({&mdw.network, &mdw_flow});
    for (size_t i = 0; i < corpus.randoms.size(); ++i) {
        pool.push_back({&corpus.randoms[i].network, &corpus.random_flows[i]});
    }
    for (size_t i = 0; i < corpus.graphs.size(); ++i) {
        pool.push_back({&corpus.graphs[i].network, &corpus.graph_flows[i]});
    }
    for (size_t i = 0; i < corpus.embedded.size(); ++i) {
        pool.push_back({&corpus.embedded[i], &corpus.embedded_flows[i]});
    }

    for (const auto& [net, flow] : pool) {
        REQUIRE_FALSE(find_augmenting_chain(*net, residual(*net, *flow)).has_value());
        if (flow->value > 0) {
            const FlowResult halved{scale(flow->flow, Rational(1) / 2), flow->value / 2};
            REQUIRE(verify_flow(*net, halved.flow, halved.value));
            REQUIRE(find_augmenting_chain(*net, residual(*net, halved)).has_value());
        }
    }
    REQUIRE(report.elapsed_ms() < 60000);
}

TEST_CASE("criterion 7: heuristic invariants over every recorded run") {
    Criterion report("criterion 7, vertex heuristic invariants");
    auto& corpus = Corpus::get();
    const auto md = gen_md();
    const auto mdw = gen_mdw();
    const auto oct = gen_octahedron();
    corpus.extra_runs.push_back(max_flow_ff(md.network));
    corpus.extra_runs.push_back(max_flow_ff(mdw.network));
    corpus.extra_runs.push_back(max_flow_ff(oct.network));

    std::vector<std::pair<const FlowNetwork*, const FfResult*>> runs;
    for (size_t i = 0; i < corpus.random_runs.size(); ++i) {
        runs.push_back({&corpus.randoms[i].network, &corpus.random_runs[i]});
    }
    const FlowNetwork* extra_nets[3] = {&md.network, &mdw.network, &oct.network};
    for (int i = 0; i < 3; ++i) runs.push_back({extra_nets[i], &corpus.extra_runs[i]});

    int total_iterations = 0;
    for (const auto& [net, run] : runs) {
        Rational previous(0);
        for (const auto& step : run->trace) {
            REQUIRE(verify_flow(*net, step.repaired_flow, step.value));
            REQUIRE(step.value > previous);
            previous = step.value;
            const FlowResult snapshot{step.repaired_flow, step.value};
            REQUIRE(is_acyclic(*net, half_saturated(*net, snapshot)));
            REQUIRE(net->real_boundary().apply(step.augmented_flow.coefficients) ==
                    net->real_boundary().apply(step.repaired_flow.coefficients));
        }
        total_iterations += run->iterations;
    }
    std::printf("[acceptance]   (criterion 7 checked %zu runs, %d iterations total)\n",
                runs.size(), total_iterations);
}

TEST_CASE("criterion 8: hitting-set reduction identity") {
    Criterion report("criterion 8, hitting-set cut identity");
    int families_checked = 0;

    // Exhaustive over universe size <= 3, up to 4 distinct nonempty subsets.
    std::vector<std::vector<int>> subsets3;
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < 3; ++e) {
            if (mask & (1 << e)) subset.push_back(e + 1);
        }
        subsets3.push_back(subset);
    }
    std::vector<int> chosen;
    auto run_family = [&](const std::vector<std::vector<int>>& family, int universe) {
        const auto inst = gen_hitting_set(universe, family);
        const auto cut = brute_min_combinatorial_cut(
            inst.network, std::vector<Rational>(inst.network.real_count(), Rational(1)), 6);
        REQUIRE(cut.weight == brute_min_hitting_set(universe, family));
        ++families_checked;
    };
    auto enumerate = [&](auto&& self, int start) -> void {
        if (!chosen.empty()) {
            std::vector<std::vector<int>> family;
            for (int idx : chosen) family.push_back(subsets3[idx]);
            run_family(family, 3);
        }
        if (chosen.size() == 4) return;
        for (int i = start; i < static_cast<int>(subsets3.size()); ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    enumerate(enumerate, 0);

    // Seeded samples for universes four to six (skipping the rare deep
    // optima that would blow the search budget, not the identity).
    std::mt19937_64 rng(555);
    int sampled = 0;
    while (sampled < 24) {
        const int universe = 4 + static_cast<int>(rng() % 3);
        const int count = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> family;
        for (int i = 0; i < count; ++i) {
            std::vector<int> subset;
            for (int e = 1; e <= universe; ++e) {
                if (rng() % 3 == 0) subset.push_back(e);
            }
            if (subset.empty()) subset.push_back(1 + static_cast<int>(rng() % universe));
            family.push_back(std::move(subset));
        }
        if (brute_min_hitting_set(universe, family) > 3) continue;
        // The exhaustive cut search is guarded at 25 cells; skip the few
        // samples whose ladder complex grows past it.
        if (gen_hitting_set(universe, family).network.real_count() > 25) continue;
        run_family(family, universe);
        ++sampled;
    }
    std::printf("[acceptance]   (criterion 8 checked %d families)\n", families_checked);
    REQUIRE(report.elapsed_ms() < 60000);
}

TEST_CASE("criterion 9: torsion witnesses") {
    Criterion report("criterion 9, torsion in the strip, none in graphs");
    const auto md = gen_md();
    const auto& bd = md.network.real_boundary();
    const auto& strip = md.index_sets.at("mobius_triangles");
    const auto& gamma_edges = md.index_sets.at("gamma_edges");
    std::vector<bool> keep(bd.rows(), false);
    for (const auto& e : bd.entries()) {
        if (std::find(strip.begin(), strip.end(), e.col) != strip.end()) keep[e.row] = true;
    }
    for (int g : gamma_edges) keep[g] = false;
    std::vector<int> rows;
    for (int r = 0; r < bd.rows(); ++r) {
        if (keep[r]) rows.push_back(r);
    }
    const auto factors = smith_normal_form(bd.select(rows, strip));
    REQUIRE(std::find(factors.begin(), factors.end(), Integer(2)) != factors.end());

    auto& corpus = Corpus::get();
    for (const auto& inst : corpus.graphs) {
        for (const auto& factor : smith_normal_form(inst.network.base.boundary(1))) {
            REQUIRE(factor == 1);
        }
    }
    REQUIRE(report.elapsed_ms() < 5000);
}
