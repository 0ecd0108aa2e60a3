#include "sflow/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sflow/errors.hpp"
#include "sflow/linalg.hpp"

namespace sflow {

namespace {

// Chain of a closed vertex walk: +1 per ascending step, -1 per descending.
Chain edge_cycle(const SimplicialComplex& cx, const std::vector<int>& walk) {
    Chain out = Chain::zero(1, cx.count(1));
    for (size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i];
        int b = walk[(i + 1) % walk.size()];
        const int sign = a < b ? 1 : -1;
        if (a > b) std::swap(a, b);
        const int idx = cx.index_of(1, {a, b});
        if (idx < 0) throw ValidationError("walk uses a missing edge");
        out.coefficients[idx] += Rational(sign);
    }
    return out;
}

std::vector<Rational> chain_sum(const std::vector<std::pair<Rational, const Chain*>>& terms,
                                int size) {
    std::vector<Rational> out(size, Rational(0));
    for (const auto& [factor, chain] : terms) {
        for (int i = 0; i < size; ++i) out[i] += factor * chain->coefficients[i];
    }
    return out;
}

// The 18 strip triangles of a width-three band, columns 0..2, glued column
// three back onto column zero with a flip, after which the two seam endpoints
// are already the single vertex 0.  Vertices: 0 = u, 1 = w, 2 = v (the seam),
// 3..6 and 7..10 the two interior columns.
const std::vector<std::vector<int>> kStripTriangles = {
    {0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 6}, {2, 5, 6},
    {3, 4, 8}, {3, 7, 8}, {4, 5, 9}, {4, 8, 9}, {5, 6, 10}, {5, 9, 10},
    {2, 7, 8}, {0, 2, 7}, {1, 8, 9}, {1, 2, 8}, {0, 9, 10}, {0, 1, 9}};

const std::vector<int> kLoopOne = {0, 3, 7};    // first boundary loop through u
const std::vector<int> kLoopTwo = {0, 6, 10};   // second boundary loop through u
const std::vector<int> kCoreLoop = {0, 1, 2};   // alpha = u w v u
const std::vector<int> kDiskTriangle = {0, 1, 2};
const std::vector<int> kWedgeOne = {0, 3, 7};
const std::vector<int> kWedgeTwo = {0, 6, 10};

struct StripOrientation {
    SimplicialComplex complex;
    Chain gamma;
    Chain alpha;
    std::vector<int> strip_indices;
};

// Orient the strip triangles so the sum of all of them has boundary
// gamma + 2 alpha; the loop directions admitting unit signs are found by
// solving for the unique bounding coefficients.
StripOrientation orient_strip(SimplicialComplex cx) {
    std::vector<int> strip_indices;
    for (const auto& t : kStripTriangles) {
        const int idx = cx.index_of(2, t);
        if (idx < 0) throw Error("strip triangle missing after closure");
        strip_indices.push_back(idx);
    }
    const SparseMatrix boundary = cx.boundary_matrix(2);
    const Chain loop_one = edge_cycle(cx, kLoopOne);
    const Chain loop_two = edge_cycle(cx, kLoopTwo);
    const Chain core = edge_cycle(cx, kCoreLoop);
    const SparseMatrix strip_cols = boundary.select_cols(strip_indices);

    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            for (int sa : {1, -1}) {
                const auto target =
                    chain_sum({{Rational(s1), &loop_one},
                               {Rational(s2), &loop_two},
                               {Rational(2 * sa), &core}},
                              cx.count(1));
                const auto solution = solve_linear(strip_cols, target);
                if (!solution) continue;
                bool unit = true;
                for (const auto& v : *solution) {
                    if (v != 1 && v != -1) {
                        unit = false;
                        break;
                    }
                }
                if (!unit) continue;
                for (size_t j = 0; j < strip_indices.size(); ++j) {
                    if ((*solution)[j] == -1) cx.set_orientation(2, strip_indices[j], -1);
                }
                StripOrientation out{std::move(cx),
                                     Chain(1, chain_sum({{Rational(s1), &loop_one},
                                                         {Rational(s2), &loop_two}},
                                                        boundary.rows())),
                                     Chain(1, chain_sum({{Rational(sa), &core}}, boundary.rows())),
                                     strip_indices};
                return out;
            }
        }
    }
    throw Error("no unit orientation of the strip exists");
}

void record_sorted(InstanceBundle& bundle, const std::string& key, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    bundle.index_sets[key] = std::move(indices);
}

std::vector<int> chain_support_indices(const Chain& chain) {
    return chain.support();
}

}  // namespace

InstanceBundle finish_bundle(InstanceBundle bundle) {
    const ChainComplexData cx = std::holds_alternative<SimplicialComplex>(bundle.source)
                                    ? std::get<SimplicialComplex>(bundle.source).compile()
                                    : std::get<ChainComplexData>(bundle.source);
    bundle.network = make_network(cx, bundle.capacities, bundle.gamma);
    if (bundle.voids) validate_voids(bundle.network, *bundle.voids);
    return bundle;
}

InstanceBundle gen_md() {
    auto triangles = kStripTriangles;
    triangles.push_back(kDiskTriangle);
    SimplicialComplex raw = SimplicialComplex::from_top_simplices(11, triangles);
    StripOrientation oriented = orient_strip(std::move(raw));
    SimplicialComplex cx = std::move(oriented.complex);

    // The disk closes the core loop: orient it so its boundary is -alpha.
    const int disk = cx.index_of(2, kDiskTriangle);
    {
        const Chain lex_boundary(1, cx.boundary_matrix(2).select_cols({disk}).apply({Rational(1)}));
        if (lex_boundary == oriented.alpha) {
            cx.set_orientation(2, disk, -1);
        } else if (!(scale(lex_boundary, Rational(-1)) == oriented.alpha)) {
            throw Error("disk boundary is not the core loop");
        }
    }

    InstanceBundle bundle;
    bundle.name = "md";
    bundle.description =
        "Moebius strip with two boundary points identified, glued to a disk along its core";
    bundle.capacities.assign(19, Rational(1));
    bundle.gamma = oriented.gamma;
    bundle.expected["max_flow"] = {Rational(1) / 2, "known: the disk route carries twice the strip flow, so unit capacities bind at one half"};
    record_sorted(bundle, "mobius_triangles", oriented.strip_indices);
    record_sorted(bundle, "disk_triangles", {disk});
    record_sorted(bundle, "gamma_edges", chain_support_indices(oriented.gamma));
    record_sorted(bundle, "alpha_edges", chain_support_indices(oriented.alpha));
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

InstanceBundle gen_mdw() {
    auto triangles = kStripTriangles;
    triangles.push_back(kDiskTriangle);
    triangles.push_back(kWedgeOne);
    triangles.push_back(kWedgeTwo);
    SimplicialComplex raw = SimplicialComplex::from_top_simplices(11, triangles);
    StripOrientation oriented = orient_strip(std::move(raw));
    SimplicialComplex cx = std::move(oriented.complex);

    const SparseMatrix lex = cx.boundary_matrix(2);
    auto orient_to = [&](const std::vector<int>& triangle, const Chain& target) {
        const int idx = cx.index_of(2, triangle);
        const Chain lex_boundary(1, lex.select_cols({idx}).apply({Rational(1)}));
        if (lex_boundary == scale(target, Rational(-1))) {
            cx.set_orientation(2, idx, -1);
        } else if (!(lex_boundary == target)) {
            throw Error("wedge triangle boundary mismatch");
        }
        return idx;
    };
    // The disk has boundary -alpha; each wedge disk closes one gamma loop.
    const Chain loop_one = edge_cycle(cx, kLoopOne);
    const Chain loop_two = edge_cycle(cx, kLoopTwo);
    Chain gamma_one = loop_one, gamma_two = loop_two;
    if (inner_product(oriented.gamma, loop_one) < 0) gamma_one = scale(loop_one, Rational(-1));
    if (inner_product(oriented.gamma, loop_two) < 0) gamma_two = scale(loop_two, Rational(-1));
    const int disk = orient_to(kDiskTriangle, scale(oriented.alpha, Rational(-1)));
    const int wedge_one = orient_to(kWedgeOne, gamma_one);
    const int wedge_two = orient_to(kWedgeTwo, gamma_two);

    InstanceBundle bundle;
    bundle.name = "mdw";
    bundle.description = "strip-disk complex with a wedge of two disks closing the figure-eight";
    bundle.capacities.assign(21, Rational(1));
    bundle.gamma = oriented.gamma;
    bundle.expected["max_flow"] = {Rational(3) / 2, "known: half a unit through the strip-disk pair plus one unit through the wedge"};
    bundle.expected["min_combinatorial_cut"] = {Rational(2),
                                                "known: one disk triangle and one wedge triangle block every route"};
    record_sorted(bundle, "mobius_triangles", oriented.strip_indices);
    record_sorted(bundle, "disk_triangles", {disk});
    record_sorted(bundle, "wedge_triangles", {wedge_one, wedge_two});
    record_sorted(bundle, "gamma_edges", chain_support_indices(oriented.gamma));
    record_sorted(bundle, "alpha_edges", chain_support_indices(oriented.alpha));
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

InstanceBundle gen_graph(const std::vector<std::pair<int, int>>& edges,
                         const std::vector<Rational>& capacities, int source, int sink) {
    if (source == sink) throw ValidationError("source and sink must differ");
    if (edges.size() != capacities.size()) throw ValidationError("capacity count mismatch");
    int max_vertex = std::max(source, sink);
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> top;
    for (const auto& [a, b] : edges) {
        if (a == b) throw ValidationError("self loops are not simplicial");
        if (a < 0 || b < 0) throw ValidationError("negative vertex");
        if (!seen.insert({a, b}).second) throw ValidationError("duplicate edge");
        if (seen.count({b, a})) {
            throw ValidationError("antiparallel edges would duplicate a 1-simplex");
        }
        max_vertex = std::max({max_vertex, a, b});
        top.push_back({std::min(a, b), std::max(a, b)});
    }
    SimplicialComplex cx = SimplicialComplex::from_top_simplices(max_vertex + 1, top);

    std::vector<Rational> caps(cx.count(1), Rational(0));
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& [a, b] = edges[i];
        const int idx = cx.index_of(1, {std::min(a, b), std::max(a, b)});
        if (a > b) cx.set_orientation(1, idx, -1);  // boundary = head - tail
        caps[idx] = capacities[i];
    }

    InstanceBundle bundle;
    bundle.name = "graph";
    bundle.description = "directed graph as a one-dimensional flow network";
    bundle.capacities = std::move(caps);
    bundle.gamma = Chain::zero(0, max_vertex + 1);
    bundle.gamma.coefficients[sink] = Rational(1);
    bundle.gamma.coefficients[source] = Rational(-1);
    bundle.index_sets["source"] = {source};
    bundle.index_sets["sink"] = {sink};
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

InstanceBundle gen_octahedron() {
    const std::vector<std::vector<int>> upper = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}};
    const std::vector<std::vector<int>> lower = {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}};
    std::vector<std::vector<int>> all = upper;
    all.insert(all.end(), lower.begin(), lower.end());
    SimplicialComplex cx = SimplicialComplex::from_top_simplices(6, all);

    // Orient both hemispheres as unit flows of the equator cycle 1-2-3-4.
    const Chain equator = edge_cycle(cx, {1, 2, 3, 4});
    const SparseMatrix lex = cx.boundary_matrix(2);
    auto orient_hemisphere = [&](const std::vector<std::vector<int>>& cells) {
        std::vector<int> indices;
        for (const auto& t : cells) indices.push_back(cx.index_of(2, t));
        const auto solution = solve_linear(lex.select_cols(indices), equator.coefficients);
        if (!solution) throw Error("hemisphere does not bound the equator");
        for (size_t j = 0; j < indices.size(); ++j) {
            if ((*solution)[j] == -1) {
                cx.set_orientation(2, indices[j], -1);
            } else if ((*solution)[j] != 1) {
                throw Error("hemisphere orientation is not a unit solution");
            }
        }
        return indices;
    };
    auto upper_idx = orient_hemisphere(upper);
    auto lower_idx = orient_hemisphere(lower);

    InstanceBundle bundle;
    bundle.name = "octahedron";
    bundle.description = "octahedron sphere, equatorial cycle, hemispheres as unit flows";
    bundle.capacities.assign(8, Rational(1));
    bundle.gamma = equator;
    bundle.expected["max_flow"] = {Rational(2), "derived: two unit hemisphere routes"};
    bundle.expected["min_combinatorial_cut"] = {Rational(2),
                                                "derived: one triangle per hemisphere"};
    record_sorted(bundle, "upper_triangles", upper_idx);
    record_sorted(bundle, "lower_triangles", lower_idx);

    VoidData voids;
    voids.void_count = 2;
    voids.unbounded_index = 1;
    voids.source_void = 0;
    voids.sides.assign(8, {0, 1});
    for (int idx : lower_idx) voids.sides[idx] = {1, 0};
    voids.gamma1_support = bundle.index_sets["lower_triangles"];
    voids.gamma2_support = bundle.index_sets["upper_triangles"];
    bundle.voids = std::move(voids);
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

InstanceBundle gen_planar_cycle4() {
    SimplicialComplex cx =
        SimplicialComplex::from_top_simplices(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    // Directed edges 0->1, 1->2, 0->3, 3->2: two disjoint paths from 0 to 2.
    cx.set_orientation(1, cx.index_of(1, {2, 3}), -1);

    InstanceBundle bundle;
    bundle.name = "planar4";
    bundle.description = "planar four-cycle with two disjoint source-sink paths";
    bundle.capacities.assign(4, Rational(1));
    bundle.gamma = Chain::zero(0, 4);
    bundle.gamma.coefficients[2] = Rational(1);
    bundle.gamma.coefficients[0] = Rational(-1);
    bundle.expected["max_flow"] = {Rational(2), "derived: two disjoint unit paths"};
    bundle.expected["min_combinatorial_cut"] = {Rational(2), "derived: one edge per path"};

    const int e01 = cx.index_of(1, {0, 1});
    const int e12 = cx.index_of(1, {1, 2});
    const int e03 = cx.index_of(1, {0, 3});
    const int e23 = cx.index_of(1, {2, 3});
    VoidData voids;
    voids.void_count = 2;
    voids.unbounded_index = 1;
    voids.source_void = 0;
    voids.sides.assign(4, {0, 1});
    voids.sides[e03] = {1, 0};
    voids.sides[e23] = {1, 0};
    voids.gamma1_support = {e03, e23};
    voids.gamma2_support = {e01, e12};
    std::sort(voids.gamma1_support.begin(), voids.gamma1_support.end());
    std::sort(voids.gamma2_support.begin(), voids.gamma2_support.end());
    bundle.voids = std::move(voids);
    record_sorted(bundle, "upper_path", {e01, e12});
    record_sorted(bundle, "lower_path", {e03, e23});
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

InstanceBundle gen_hitting_set(int universe_size, const std::vector<std::vector<int>>& family) {
    if (family.empty()) throw ValidationError("empty family");
    std::vector<int> used;  // elements in first-appearance order
    for (const auto& subset : family) {
        if (subset.empty()) throw ValidationError("empty subset");
        for (int s : subset) {
            if (s < 1 || s > universe_size) throw ValidationError("element out of range");
            if (std::find(used.begin(), used.end(), s) == used.end()) used.push_back(s);
        }
    }
    const int n_disks = static_cast<int>(family.size());
    const int m = static_cast<int>(used.size());  // one ladder level per element
    auto level_of = [&](int element) {
        return static_cast<int>(std::find(used.begin(), used.end(), element) - used.begin());
    };

    // Vertices: the gamma triangle corners 0,1,2 plus a hub carrying every
    // loop edge.  Edges: the three gamma edges, m ring loops (one between
    // consecutive levels), and one tie loop per consecutive filler pair of a
    // disk.  A level-j cell spans ring j-1 to ring j; gamma acts as ring -1
    // and the cap level m has no lower ring.
    const int n_vertices = 4;
    std::vector<std::string> edge_labels = {"g01", "g12", "g02"};
    for (int r = 0; r < m; ++r) edge_labels.push_back("ring" + std::to_string(r));

    struct Cell {
        std::string label;
        int disk = -1;      // filler owner, -1 for shared element cells
        int level = 0;
        int element = 0;    // 0 for fillers
    };
    std::vector<Cell> cells;
    std::map<int, int> element_cell;  // element -> cell index
    for (int s : used) {
        element_cell[s] = static_cast<int>(cells.size());
        cells.push_back({"elem_" + std::to_string(s), -1, level_of(s), s});
    }
    std::vector<std::vector<int>> filler_cells(n_disks);
    for (int i = 0; i < n_disks; ++i) {
        std::set<int> element_levels;
        for (int s : family[i]) element_levels.insert(level_of(s));
        for (int level = 0; level <= m; ++level) {
            if (element_levels.count(level)) continue;
            filler_cells[i].push_back(static_cast<int>(cells.size()));
            cells.push_back({"disk" + std::to_string(i + 1) + "_fill" + std::to_string(level),
                             i, level, 0});
        }
        // The cap level m never hosts an element, so every disk has a filler.
        for (size_t k = 0; k + 1 < filler_cells[i].size(); ++k) {
            edge_labels.push_back("tie" + std::to_string(i + 1) + "_" + std::to_string(k));
        }
    }

    const int n_edges = static_cast<int>(edge_labels.size());
    const int n_cells = static_cast<int>(cells.size());

    std::vector<SparseMatrix::Entry> d1;  // only the gamma edges have boundary
    d1.push_back({1, 0, Rational(1)});
    d1.push_back({0, 0, Rational(-1)});  // g01: vertex 1 - vertex 0
    d1.push_back({2, 1, Rational(1)});
    d1.push_back({1, 1, Rational(-1)});  // g12
    d1.push_back({2, 2, Rational(1)});
    d1.push_back({0, 2, Rational(-1)});  // g02
    const SparseMatrix boundary1(n_vertices, n_edges, std::move(d1));

    const Rational one(1);
    std::vector<SparseMatrix::Entry> d2;
    auto add_level_column = [&](int cell, int level) {
        if (level == 0) {
            d2.push_back({0, cell, one});   // g01
            d2.push_back({1, cell, one});   // g12
            d2.push_back({2, cell, -one});  // g02: the gamma cycle
        } else {
            d2.push_back({3 + (level - 1), cell, -one});  // lower ring, consumed
        }
        if (level < m) d2.push_back({3 + level, cell, one});  // upper ring, produced
    };
    for (int c = 0; c < n_cells; ++c) {
        const auto& cell = cells[c];
        if (cell.disk < 0) {
            add_level_column(c, cell.level);
        }
    }
    int tie_edge = 3 + m;
    for (int i = 0; i < n_disks; ++i) {
        for (size_t k = 0; k < filler_cells[i].size(); ++k) {
            add_level_column(filler_cells[i][k], cells[filler_cells[i][k]].level);
            if (k + 1 < filler_cells[i].size()) {
                d2.push_back({tie_edge, filler_cells[i][k], one});
                d2.push_back({tie_edge, filler_cells[i][k + 1], -one});
                ++tie_edge;
            }
        }
    }
    const SparseMatrix boundary2(n_edges, n_cells, std::move(d2));

    std::vector<std::string> cell_labels;
    for (const auto& cell : cells) cell_labels.push_back(cell.label);
    std::vector<std::string> vertex_labels = {"v0", "v1", "v2", "hub"};
    ChainComplexData cx = make_chain_complex(
        2, {n_vertices, n_edges, n_cells}, {boundary1, boundary2},
        {vertex_labels, edge_labels, cell_labels});

    InstanceBundle bundle;
    bundle.name = "hitting_set";
    bundle.description = "chain-level hitting set reduction";
    bundle.capacities.assign(n_cells, Rational(1));
    Chain gamma = Chain::zero(1, n_edges);
    gamma.coefficients[0] = Rational(1);
    gamma.coefficients[1] = Rational(1);
    gamma.coefficients[2] = Rational(-1);
    bundle.gamma = std::move(gamma);
    const int hitting = brute_min_hitting_set(universe_size, family);
    bundle.expected["min_hitting_set"] = {Rational(hitting),
                                          "derived: exhaustive minimum hitting set"};
    if (n_disks <= 4) {
        // With at most four subsets the sign-free cut search provably meets
        // the hitting number; larger families only pin the directed variant.
        bundle.expected["min_combinatorial_cut"] = {Rational(hitting),
                                                    "derived: exhaustive minimum hitting set"};
    }
    std::vector<int> element_indices;
    for (const auto& [element, cell] : element_cell) element_indices.push_back(cell);
    record_sorted(bundle, "element_cells", element_indices);
    std::vector<int> fillers;
    for (const auto& group : filler_cells) fillers.insert(fillers.end(), group.begin(), group.end());
    record_sorted(bundle, "filler_cells", fillers);
    bundle.source = std::move(cx);
    return finish_bundle(std::move(bundle));
}

namespace {

int draw(std::mt19937_64& rng, int bound) {  // uniform enough for test fodder
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

bool draw_probability(std::mt19937_64& rng, const Rational& p) {
    const auto den = static_cast<std::uint64_t>(denominator(p));
    const auto num = static_cast<std::uint64_t>(numerator(p));
    return rng() % den < num;
}

}  // namespace

InstanceBundle gen_random(std::uint64_t seed, int n_vertices, int d, const Rational& density) {
    if (d != 1 && d != 2) throw ValidationError("random instances support dimensions 1 and 2");
    if (density < 0 || density > 1) throw ValidationError("density must be in [0, 1]");
    std::mt19937_64 rng(seed);

    const int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<int>> top;
        if (d == 1) {
            for (int a = 0; a < n_vertices; ++a) {
                for (int b = a + 1; b < n_vertices; ++b) {
                    if (draw_probability(rng, density)) top.push_back({a, b});
                }
            }
        } else {
            for (int a = 0; a < n_vertices; ++a) {
                for (int b = a + 1; b < n_vertices; ++b) {
                    for (int c = b + 1; c < n_vertices; ++c) {
                        if (draw_probability(rng, density)) top.push_back({a, b, c});
                    }
                }
            }
        }
        if (top.empty()) continue;
        SimplicialComplex cx = SimplicialComplex::from_top_simplices(n_vertices, top);
        if (cx.dimension() != d) continue;
        if (d == 1) {
            // Random orientations make the graphs genuinely directed.
            for (int e = 0; e < cx.count(1); ++e) {
                if (draw(rng, 2) == 1) cx.set_orientation(1, e, -1);
            }
        }
        const ChainComplexData data = cx.compile();
        const int n_top = data.sizes[d];

        Chain carrier = Chain::zero(d, n_top);
        for (int i = 0; i < n_top; ++i) {
            const int coin = draw(rng, 4);
            if (coin >= 2) carrier.coefficients[i] = Rational(coin - 1);  // 0,0,1,2
        }
        const Chain gamma = Chain(d - 1, data.boundary(d).apply(carrier.coefficients));
        if (gamma.is_zero()) continue;

        std::vector<Rational> capacities(n_top);
        for (auto& c : capacities) c = Rational(1 + draw(rng, 7));

        InstanceBundle bundle;
        bundle.name = "random";
        bundle.description = "seeded random instance";
        bundle.capacities = std::move(capacities);
        bundle.gamma = gamma;
        bundle.source = std::move(cx);
        return finish_bundle(std::move(bundle));
    }
    throw GuardError("no valid random instance found within the retry bound");
}

int brute_min_hitting_set(int universe_size, const std::vector<std::vector<int>>& family) {
    if (universe_size > 20) throw GuardError("hitting set oracle limited to 20 elements");
    for (const auto& subset : family) {
        if (subset.empty()) throw ValidationError("empty subset");
    }
    int best = universe_size + 1;
    for (std::uint32_t mask = 0; mask < (1u << universe_size); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool hits = true;
        for (const auto& subset : family) {
            bool touched = false;
            for (int s : subset) {
                if (mask & (1u << (s - 1))) {
                    touched = true;
                    break;
                }
            }
            if (!touched) {
                hits = false;
                break;
            }
        }
        if (hits) best = size;
    }
    return best;
}

}  // namespace sflow
