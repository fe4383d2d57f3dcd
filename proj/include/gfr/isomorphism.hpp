#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "gfr/ext_nat.hpp"
#include "gfr/graph.hpp"

namespace gfr {

// Isomorphism-invariant summary. Equality is necessary but not sufficient
// for isomorphism; it is used for pruning and component bucketing.
struct Fingerprint {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<int> degrees;            // sorted ascending
    std::vector<int> triangle_counts;    // per-vertex, sorted ascending
    std::vector<ExtNat> eccentricities;  // sorted ascending

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Graph& g);

struct IsoResult {
    bool isomorphic = false;
    // Bijection as sorted (source, target) label pairs; present iff isomorphic.
    std::optional<std::vector<std::pair<VertexId, VertexId>>> mapping;
};

// Exact test. Backtracking search with degree/neighborhood pruning on each
// connected component; disconnected graphs are matched component-by-component
// within fingerprint buckets. Returned mappings are re-verified.
IsoResult are_isomorphic(const Graph& a, const Graph& b);

// Checks that `mapping` is a bijection preserving adjacency and
// non-adjacency in both directions.
bool verify_mapping(const Graph& a, const Graph& b,
                    const std::vector<std::pair<VertexId, VertexId>>& mapping);

} // namespace gfr
