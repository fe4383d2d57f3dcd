#include "gfr/catalog.hpp"

#include <map>
#include <utility>

#include "gfr/isomorphism.hpp"

namespace gfr {

namespace {

// Keeps one representative per isomorphism class, bucketed by fingerprint.
class IsoDedup {
public:
    bool insert(Graph g) {
        auto& bucket = buckets_[fingerprint(g)];
        for (int idx : bucket)
            if (are_isomorphic(graphs_[static_cast<std::size_t>(idx)], g).isomorphic) return false;
        bucket.push_back(static_cast<int>(graphs_.size()));
        graphs_.push_back(std::move(g));
        return true;
    }

    std::vector<Graph> take() { return std::move(graphs_); }
    const std::vector<Graph>& graphs() const { return graphs_; }

private:
    std::vector<Graph> graphs_;
    std::map<Fingerprint, std::vector<int>> buckets_;
};

// Appends vertex "n" to g (labels "1".."n-1") adjacent to the mask's bits.
Graph extend(const Graph& g, std::uint64_t mask) {
    int n = g.order() + 1;
    std::vector<VertexId> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    auto edges = g.edges();
    for (int i = 0; i < g.order(); ++i)
        if ((mask >> i) & 1) edges.emplace_back(g.label(i), std::to_string(n));
    return Graph::from_edge_list(labels, edges);
}

} // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    std::vector<Graph> prev{Graph{}};
    for (int k = 1; k <= n; ++k) {
        IsoDedup dedup;
        for (const Graph& g : prev)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask)
                dedup.insert(extend(g, mask));
        prev = dedup.take();
    }
    return prev;
}

std::vector<Graph> nonisomorphic_graphs_up_to(int n) {
    std::vector<Graph> out;
    std::vector<Graph> level{Graph{}};
    out.push_back(level.front());
    for (int k = 1; k <= n; ++k) {
        IsoDedup dedup;
        for (const Graph& g : level)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask)
                dedup.insert(extend(g, mask));
        level = dedup.take();
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> cographs_up_to(int n) {
    std::vector<std::vector<Graph>> by_size(static_cast<std::size_t>(n + 1));
    if (n >= 1) by_size[1].push_back(Graph::from_edge_list({"1"}, {}));
    for (int s = 2; s <= n; ++s) {
        IsoDedup dedup;
        for (int i = 1; i <= s / 2; ++i) {
            int j = s - i;
            for (const Graph& a : by_size[static_cast<std::size_t>(i)])
                for (const Graph& b : by_size[static_cast<std::size_t>(j)]) {
                    dedup.insert(disjoint_union(a, b));
                    dedup.insert(graph_join(a, b));
                }
        }
        by_size[static_cast<std::size_t>(s)] = dedup.take();
    }
    std::vector<Graph> out;
    for (int s = 1; s <= n; ++s)
        out.insert(out.end(), by_size[static_cast<std::size_t>(s)].begin(),
                   by_size[static_cast<std::size_t>(s)].end());
    return out;
}

} // namespace gfr
