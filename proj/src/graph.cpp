#include "gfr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace gfr {

bool vertex_less(const VertexId& a, const VertexId& b) {
    auto digits = [](const VertexId& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    bool da = digits(a), db = digits(b);
    if (da != db) return da;
    if (da && a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Graph Graph::from_edge_list(const std::vector<VertexId>& vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    g.labels_ = vertices;
    std::sort(g.labels_.begin(), g.labels_.end(), vertex_less);
    g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());
    std::size_t n = g.labels_.size();
    g.adj_.assign(n, Bitset(n));
    for (const auto& [u, v] : edges) {
        if (u == v) throw SelfLoopError(u);
        auto iu = g.find(u);
        if (!iu) throw UnknownVertexError(u);
        auto iv = g.find(v);
        if (!iv) throw UnknownVertexError(v);
        auto a = static_cast<std::size_t>(*iu), b = static_cast<std::size_t>(*iv);
        if (!g.adj_[a].test(b)) {
            g.adj_[a].set(b);
            g.adj_[b].set(a);
            ++g.edge_count_;
        }
    }
    return g;
}

std::optional<int> Graph::find(const VertexId& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v, vertex_less);
    if (it == labels_.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

int Graph::index_of(const VertexId& v) const {
    auto i = find(v);
    if (!i) throw UnknownVertexError(v);
    return *i;
}

Bitset Graph::full_set() const {
    Bitset s(labels_.size());
    s.set_all();
    return s;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v))
            out.emplace_back(label(u), label(v));
    return out;
}

Bitset to_vertex_set(const Graph& g, const std::vector<VertexId>& labels) {
    Bitset s(static_cast<std::size_t>(g.order()));
    for (const auto& v : labels) s.set(static_cast<std::size_t>(g.index_of(v)));
    return s;
}

std::vector<VertexId> to_labels(const Graph& g, const Bitset& s) {
    std::vector<VertexId> out;
    out.reserve(s.count());
    s.for_each([&](int i) { out.push_back(g.label(i)); });
    return out;
}

Bitset link_set(const Graph& g, const Bitset& s) {
    Bitset out = g.full_set();
    s.for_each([&](int v) { out &= g.neighbors(v); });
    return out;
}

std::vector<VertexId> link(const Graph& g, const std::vector<VertexId>& s) {
    return to_labels(g, link_set(g, to_vertex_set(g, s)));
}

std::vector<VertexId> star(const Graph& g, const VertexId& v) {
    int i = g.index_of(v);
    Bitset s = g.neighbors(i);
    s.set(static_cast<std::size_t>(i));
    return to_labels(g, s);
}

bool is_complete_set(const Graph& g, const Bitset& s) {
    std::size_t k = s.count();
    if (k < 2) return true;
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.neighbors(v).intersection_count(s) != k - 1) return false;
    return true;
}

bool is_complete(const Graph& g, const std::vector<VertexId>& s) {
    return is_complete_set(g, to_vertex_set(g, s));
}

bool is_complete_graph(const Graph& g) { return is_complete_set(g, g.full_set()); }

Graph induced_subgraph(const Graph& g, const Bitset& s) {
    std::vector<VertexId> labels = to_labels(g, s);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        Bitset row = g.neighbors(u) & s;
        for (int v = row.next(u); v >= 0; v = row.next(v))
            edges.emplace_back(g.label(u), g.label(v));
    }
    return Graph::from_edge_list(labels, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& s) {
    return induced_subgraph(g, to_vertex_set(g, s));
}

std::vector<Bitset> connected_component_sets(const Graph& g) {
    std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<bool> seen(n, false);
    std::vector<Bitset> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        Bitset comp(n);
        std::queue<int> q;
        q.push(static_cast<int>(s));
        seen[s] = true;
        comp.set(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            g.neighbors(u).for_each([&](int v) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    comp.set(static_cast<std::size_t>(v));
                    q.push(v);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& c : connected_component_sets(g)) out.push_back(to_labels(g, c));
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && connected_component_sets(g).size() == 1;
}

namespace {

// BFS levels from source; -1 for unreachable.
std::vector<int> bfs_levels(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int v) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

} // namespace

ExtNat distance(const Graph& g, int u, int v) {
    int d = bfs_levels(g, u)[static_cast<std::size_t>(v)];
    return d < 0 ? ExtNat::inf() : ExtNat(static_cast<std::uint64_t>(d));
}

ExtNat distance(const Graph& g, const VertexId& u, const VertexId& v) {
    return distance(g, g.index_of(u), g.index_of(v));
}

ExtNat eccentricity(const Graph& g, int v) {
    auto dist = bfs_levels(g, v);
    ExtNat ecc = 0;
    for (int d : dist) {
        if (d < 0) return ExtNat::inf();
        ecc = std::max(ecc, ExtNat(static_cast<std::uint64_t>(d)));
    }
    return ecc;
}

ExtNat radius(const Graph& g) {
    if (g.order() == 0) return 0;
    ExtNat r = ExtNat::inf();
    for (int v = 0; v < g.order(); ++v) r = std::min(r, eccentricity(g, v));
    return r;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(g.label(u), g.label(v));
    return Graph::from_edge_list(g.vertices(), edges);
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool cross_edges) {
    std::vector<VertexId> labels;
    int n = a.order(), m = b.order();
    labels.reserve(static_cast<std::size_t>(n + m));
    for (int i = 1; i <= n + m; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = a.neighbors(u).next(u); v >= 0; v = a.neighbors(u).next(v))
            edges.emplace_back(std::to_string(u + 1), std::to_string(v + 1));
    for (int u = 0; u < m; ++u)
        for (int v = b.neighbors(u).next(u); v >= 0; v = b.neighbors(u).next(v))
            edges.emplace_back(std::to_string(n + u + 1), std::to_string(n + v + 1));
    if (cross_edges)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < m; ++v)
                edges.emplace_back(std::to_string(u + 1), std::to_string(n + v + 1));
    return Graph::from_edge_list(labels, edges);
}

} // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }

Graph graph_join(const Graph& a, const Graph& b) { return combine(a, b, true); }

} // namespace gfr
