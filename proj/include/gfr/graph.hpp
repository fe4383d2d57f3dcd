#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfr/bitset.hpp"
#include "gfr/errors.hpp"
#include "gfr/ext_nat.hpp"

namespace gfr {

// Vertex labels are opaque strings with a total order. Digit-only labels sort
// numerically and before everything else, so family graphs list as 1..n.
using VertexId = std::string;

bool vertex_less(const VertexId& a, const VertexId& b);

// Finite simple undirected graph. Labels are re-indexed to dense integers at
// construction; adjacency is a symmetric, irreflexive bitset matrix.
// Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Symmetrizes and deduplicates edges. Throws SelfLoopError for (v,v)
    // pairs and UnknownVertexError for endpoints not in `vertices`.
    static Graph from_edge_list(const std::vector<VertexId>& vertices,
                                const std::vector<std::pair<VertexId, VertexId>>& edges);

    int order() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    const std::vector<VertexId>& vertices() const { return labels_; }
    const VertexId& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    std::optional<int> find(const VertexId& v) const;
    int index_of(const VertexId& v) const; // throws UnknownVertexError

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    bool adjacent(const VertexId& u, const VertexId& v) const { return adjacent(index_of(u), index_of(v)); }
    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    Bitset full_set() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const; // sorted pairs

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
    std::vector<VertexId> labels_; // sorted by vertex_less
    std::vector<Bitset> adj_;
    std::size_t edge_count_ = 0;
};

// Conversions between label sets and index bitsets. Label inputs are
// validated against the graph (UnknownVertexError).
Bitset to_vertex_set(const Graph& g, const std::vector<VertexId>& labels);
std::vector<VertexId> to_labels(const Graph& g, const Bitset& s);

// Common neighborhood of S; the empty set maps to all vertices.
Bitset link_set(const Graph& g, const Bitset& s);
std::vector<VertexId> link(const Graph& g, const std::vector<VertexId>& s);

std::vector<VertexId> star(const Graph& g, const VertexId& v);

bool is_complete_set(const Graph& g, const Bitset& s);
bool is_complete(const Graph& g, const std::vector<VertexId>& s);
bool is_complete_graph(const Graph& g);

Graph induced_subgraph(const Graph& g, const Bitset& s);
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& s);

std::vector<Bitset> connected_component_sets(const Graph& g);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g); // empty graph counts as not connected

ExtNat distance(const Graph& g, int u, int v);
ExtNat distance(const Graph& g, const VertexId& u, const VertexId& v);
ExtNat eccentricity(const Graph& g, int v);

// Minimum eccentricity; 0 for the empty graph, inf when disconnected.
ExtNat radius(const Graph& g);

Graph complement(const Graph& g);

// Both relabel vertices positionally to "1".."n+m".
Graph disjoint_union(const Graph& a, const Graph& b);
Graph graph_join(const Graph& a, const Graph& b);

} // namespace gfr
