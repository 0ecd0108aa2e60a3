#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "sflow/embedded_dual.hpp"
#include "sflow/simplicial_complex.hpp"

namespace sflow {

struct ExpectedValue {
    Rational value;
    std::string provenance;

    bool operator==(const ExpectedValue& other) const = default;
};

/// A generated test instance: the source complex (simplicial or raw chain
/// data), the flow network compiled from it, optional void data, and named
/// metadata used by tests (expected values with provenance, index groups).
struct InstanceBundle {
    std::string name;
    std::string description;
    std::variant<ChainComplexData, SimplicialComplex> source;
    std::vector<Rational> capacities;
    Chain gamma;
    std::optional<VoidData> voids;
    std::map<std::string, ExpectedValue> expected;
    std::map<std::string, std::vector<int>> index_sets;
    FlowNetwork network;
};

/// Compiles the source complex and builds the network; shared tail of every
/// generator and of the instance file reader.
InstanceBundle finish_bundle(InstanceBundle bundle);

/// Triangulated Moebius strip with two boundary points identified (making the
/// strip boundary a figure-eight gamma) glued to a disk along the core
/// triangle alpha.  Unit capacities; the maximum flow value is 1/2.
InstanceBundle gen_md();

/// gen_md plus a wedge of two disks closing the figure-eight.  Unit
/// capacities; maximum flow 3/2 while the cheapest combinatorial cut is 2.
InstanceBundle gen_mdw();

/// Directed graph as a 1-complex with gamma = t - s.
InstanceBundle gen_graph(const std::vector<std::pair<int, int>>& edges,
                         const std::vector<Rational>& capacities, int source, int sink);

/// Octahedron boundary sphere, gamma = equator, hemispheres oriented as two
/// unit gamma-flows, with the void data of the standard embedding.
InstanceBundle gen_octahedron();

/// Four-cycle planar graph with two disjoint source-sink paths and its
/// classical planar dual as void data.
InstanceBundle gen_planar_cycle4();

/// Hitting-set reduction, built directly at the chain level: one shared cell
/// per element, one private ladder of filler cells per subset, arranged so a
/// set of cells stops gamma from bounding exactly when the corresponding
/// elements hit every subset.  Minimum cut weight = minimum hitting set size.
InstanceBundle gen_hitting_set(int universe_size, const std::vector<std::vector<int>>& family);

/// Seeded random flow network, d in {1, 2}: a random downward-closed complex
/// with gamma the boundary of a random non-negative chain (so gamma is always
/// null-homologous).  Identical seeds give identical instances.
InstanceBundle gen_random(std::uint64_t seed, int n_vertices, int d, const Rational& density);

/// Exhaustive minimum hitting set size (tiny instances only).
int brute_min_hitting_set(int universe_size, const std::vector<std::vector<int>>& family);

}  // namespace sflow
