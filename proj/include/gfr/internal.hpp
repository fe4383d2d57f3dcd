#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfr/ext_nat.hpp"
#include "gfr/graph.hpp"

namespace gfr {

// An internal set is a non-empty vertex set whose common neighborhood is not
// complete; an internal vertex is a singleton internal set.

struct InternalSetReport {
    bool all_singletons = true;
    // An internal set of size >= 2 when all_singletons is false. The
    // brute-force path reports the lexicographically least such set; the fast
    // path reports the common neighborhood of the first non-adjacent pair
    // whose common neighborhood has two or more vertices.
    std::optional<std::vector<VertexId>> witness;
    std::vector<VertexId> internal_vertices; // singleton internal sets
    std::vector<std::vector<VertexId>> sets; // bounded listing, enumeration order
    std::optional<std::uint64_t> total_count; // exact only for the brute force
    bool truncated = false;
};

// Enumerates every non-empty subset (up to max_size when given) and tests its
// link for completeness. Exponential; graphs over 20 vertices are rejected
// unless force is set. When max_size is given the report only reflects the
// enumerated sizes.
InternalSetReport internal_sets_bruteforce(const Graph& g,
                                           std::optional<int> max_size = std::nullopt,
                                           bool force = false,
                                           std::size_t list_cap = 64);

// Polynomial path: all_singletons iff every non-adjacent pair has at most one
// common neighbor. Does not materialize the subset family.
InternalSetReport internal_sets_fast(const Graph& g);

std::vector<VertexId> internal_vertices(const Graph& g);

// Induced subgraph on the internal vertices. Always computable; it matches
// the usual notion of the internal graph only when all internal sets are
// singletons (see InternalSetReport::all_singletons).
Graph internal_graph(const Graph& g);

struct LinkConditionWitness {
    VertexId center;                     // all three below are its neighbors
    VertexId path_a, path_mid, path_b;   // induced path: a-mid, mid-b edges, a-b non-edge
};

struct LinkConditionResult {
    bool holds = true;
    std::optional<LinkConditionWitness> witness;          // fast path
    std::optional<std::vector<VertexId>> failing_subset;  // brute force
};

// Fast path: holds iff every neighborhood induces a disjoint union of
// cliques (no induced 3-vertex path). Witness is the first failing
// (center, triple) in vertex order.
LinkConditionResult link_condition(const Graph& g);

// Subset oracle: every non-empty subset with non-empty link must induce a
// graph whose connected components are complete. Same size guard as
// internal_sets_bruteforce.
LinkConditionResult link_condition_bruteforce(const Graph& g, bool force = false);

struct HRigidityReport {
    bool locally_finite = true; // every finite graph is
    bool internal_sets_are_vertices = true;
    std::optional<std::vector<VertexId>> internal_set_witness;
    bool link_condition_holds = true;
    std::optional<LinkConditionWitness> link_witness;
    bool h_rigid = true;

    // Informational: rigidity itself does not require connectivity, but the
    // rigidity theorems downstream do.
    bool connected = false;
    bool int_graph_well_defined = true; // == internal_sets_are_vertices
    std::vector<VertexId> int_vertices;
    ExtNat graph_radius;
    std::string note; // non-empty for documented discrepancy cases
};

HRigidityReport is_h_rigid(const Graph& g, bool use_oracle = false);

// Every external vertex must have an internal neighbor. Requires g
// connected, all internal sets singletons, and a non-empty internal graph;
// throws PreconditionError otherwise.
bool check_external_adjacency(const Graph& g);

// radius(g) <= radius(internal_graph(g)) + 1 in extended arithmetic.
// Requires g connected with all internal sets singletons.
bool check_radius_bound(const Graph& g);

nlohmann::json report_to_json(const HRigidityReport& r);

} // namespace gfr
