#include "gfr/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace gfr {

Fingerprint fingerprint(const Graph& g) {
    Fingerprint f;
    f.vertex_count = static_cast<std::size_t>(g.order());
    f.edge_count = g.edge_count();
    for (int v = 0; v < g.order(); ++v) {
        f.degrees.push_back(g.degree(v));
        int tri = 0;
        g.neighbors(v).for_each([&](int u) {
            tri += static_cast<int>(g.neighbors(u).intersection_count(g.neighbors(v)));
        });
        f.triangle_counts.push_back(tri / 2);
        f.eccentricities.push_back(eccentricity(g, v));
    }
    std::sort(f.degrees.begin(), f.degrees.end());
    std::sort(f.triangle_counts.begin(), f.triangle_counts.end());
    std::sort(f.eccentricities.begin(), f.eccentricities.end());
    return f;
}

namespace {

// (degree, sorted neighbor degrees): cheap per-vertex compatibility key.
using Sig = std::pair<int, std::vector<int>>;

std::vector<Sig> signatures(const Graph& g) {
    std::vector<Sig> sigs(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nd;
        g.neighbors(v).for_each([&](int u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        sigs[static_cast<std::size_t>(v)] = {g.degree(v), std::move(nd)};
    }
    return sigs;
}

// Index mapping a->b for connected a, or nullopt.
std::optional<std::vector<int>> connected_iso(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto sa = signatures(a);
    auto sb = signatures(b);
    {
        auto ka = sa, kb = sb;
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
    }

    std::vector<int> cand_count(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sa[static_cast<std::size_t>(v)] == sb[static_cast<std::size_t>(w)])
                ++cand_count[static_cast<std::size_t>(v)];

    // Order: rarest-signature start, then greedily prefer vertices with the
    // most already-ordered neighbors (keeps the search anchored).
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (cand_count[static_cast<std::size_t>(v)] < cand_count[static_cast<std::size_t>(start)])
            start = v;
    order.push_back(start);
    placed[static_cast<std::size_t>(start)] = true;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_anchors = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int anchors = 0;
            for (int u : order)
                if (a.adjacent(v, u)) ++anchors;
            if (anchors > best_anchors ||
                (anchors == best_anchors &&
                 cand_count[static_cast<std::size_t>(v)] < cand_count[static_cast<std::size_t>(best)])) {
                best = v;
                best_anchors = anchors;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = true;
    }

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto consistent = [&](int v, int w, std::size_t depth) {
        for (std::size_t k = 0; k < depth; ++k) {
            int u = order[k];
            if (a.adjacent(v, u) != b.adjacent(w, map[static_cast<std::size_t>(u)])) return false;
        }
        return true;
    };

    // Iterative DFS over the fixed vertex order.
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    std::size_t depth = 0;
    while (true) {
        int v = order[depth];
        int w = choice[depth] + 1;
        bool advanced = false;
        for (; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (sa[static_cast<std::size_t>(v)] != sb[static_cast<std::size_t>(w)]) continue;
            if (!consistent(v, w, depth)) continue;
            choice[depth] = w;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            advanced = true;
            break;
        }
        if (advanced) {
            if (depth + 1 == static_cast<std::size_t>(n)) return map;
            ++depth;
            choice[depth] = -1;
        } else {
            if (depth == 0) return std::nullopt;
            --depth;
            used[static_cast<std::size_t>(choice[depth])] = false;
            map[static_cast<std::size_t>(order[depth])] = -1;
        }
    }
}

} // namespace

bool verify_mapping(const Graph& a, const Graph& b,
                    const std::vector<std::pair<VertexId, VertexId>>& mapping) {
    if (a.order() != b.order() || mapping.size() != static_cast<std::size_t>(a.order()))
        return false;
    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    std::vector<bool> hit(static_cast<std::size_t>(b.order()), false);
    for (const auto& [src, dst] : mapping) {
        auto i = a.find(src);
        auto j = b.find(dst);
        if (!i || !j) return false;
        if (map[static_cast<std::size_t>(*i)] != -1 || hit[static_cast<std::size_t>(*j)])
            return false;
        map[static_cast<std::size_t>(*i)] = *j;
        hit[static_cast<std::size_t>(*j)] = true;
    }
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v) !=
                b.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

IsoResult are_isomorphic(const Graph& a, const Graph& b) {
    if (fingerprint(a) != fingerprint(b)) return {};

    auto comps_a = connected_component_sets(a);
    auto comps_b = connected_component_sets(b);
    if (comps_a.size() != comps_b.size()) return {};

    std::vector<Graph> ga, gb;
    for (const auto& c : comps_a) ga.push_back(induced_subgraph(a, c));
    for (const auto& c : comps_b) gb.push_back(induced_subgraph(b, c));

    std::map<Fingerprint, std::pair<std::vector<int>, std::vector<int>>> groups;
    for (std::size_t i = 0; i < ga.size(); ++i) groups[fingerprint(ga[i])].first.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < gb.size(); ++i) groups[fingerprint(gb[i])].second.push_back(static_cast<int>(i));
    for (const auto& [fp, pair] : groups)
        if (pair.first.size() != pair.second.size()) return {};

    // Within each bucket, assign a-components to b-components by
    // backtracking; pairwise results are memoized.
    std::map<std::pair<int, int>, std::optional<std::vector<int>>> memo;
    auto pair_iso = [&](int i, int j) -> const std::optional<std::vector<int>>& {
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, connected_iso(ga[static_cast<std::size_t>(i)], gb[static_cast<std::size_t>(j)])).first;
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> mapping;
    for (const auto& [fp, pair] : groups) {
        const auto& as = pair.first;
        const auto& bs = pair.second;
        std::vector<int> assign(as.size(), -1);
        std::vector<bool> used(bs.size(), false);
        std::size_t k = 0;
        while (k < as.size()) {
            int next = assign[k] + 1;
            bool found = false;
            for (; next < static_cast<int>(bs.size()); ++next) {
                if (used[static_cast<std::size_t>(next)]) continue;
                if (pair_iso(as[k], bs[static_cast<std::size_t>(next)])) {
                    found = true;
                    break;
                }
            }
            if (found) {
                assign[k] = next;
                used[static_cast<std::size_t>(next)] = true;
                ++k;
                if (k < as.size()) assign[k] = -1;
            } else {
                if (k == 0) return {};
                assign[k] = -1;
                --k;
                used[static_cast<std::size_t>(assign[k])] = false;
            }
        }
        for (std::size_t i = 0; i < as.size(); ++i) {
            const Graph& ca = ga[static_cast<std::size_t>(as[i])];
            const Graph& cb = gb[static_cast<std::size_t>(bs[static_cast<std::size_t>(assign[i])])];
            const auto& m = *pair_iso(as[i], bs[static_cast<std::size_t>(assign[i])]);
            for (int v = 0; v < ca.order(); ++v)
                mapping.emplace_back(ca.label(v), cb.label(m[static_cast<std::size_t>(v)]));
        }
    }

    std::sort(mapping.begin(), mapping.end(),
              [](const auto& x, const auto& y) { return vertex_less(x.first, y.first); });
    if (!verify_mapping(a, b, mapping)) return {}; // bug trap
    return {true, std::move(mapping)};
}

} // namespace gfr
