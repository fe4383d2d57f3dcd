#include "gfr/families.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <vector>

namespace gfr {

namespace {

std::vector<VertexId> numbered(int n) {
    std::vector<VertexId> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return v;
}

Graph from_int_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<VertexId, VertexId>> e;
    e.reserve(edges.size());
    for (auto [u, v] : edges) e.emplace_back(std::to_string(u), std::to_string(v));
    return Graph::from_edge_list(numbered(n), e);
}

} // namespace

Graph line(int n) {
    if (n < 2) throw BadParamError("line: n >= 2 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return from_int_edges(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw BadParamError("cycle: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return from_int_edges(n, e);
}

Graph complete(int n) {
    if (n < 1) throw BadParamError("complete: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return from_int_edges(n, e);
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw BadParamError("complete_bipartite: m, n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= m; ++i)
        for (int j = m + 1; j <= m + n; ++j) e.emplace_back(i, j);
    return from_int_edges(m + n, e);
}

Graph star(int k) { return complete_bipartite(1, k); }

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw BadParamError("random_tree: n >= 1 required");
    if (n == 1) return Graph::from_edge_list({"1"}, {});
    if (n == 2) return from_int_edges(2, {{1, 2}});

    std::mt19937_64 eng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(eng() % static_cast<std::uint64_t>(n)) + 1;

    // Pruefer decoding with an ordered leaf set for determinism.
    std::vector<int> deg(static_cast<std::size_t>(n + 1), 1);
    for (int c : code) ++deg[static_cast<std::size_t>(c)];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);

    std::vector<std::pair<int, int>> e;
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, c);
        if (--deg[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    e.emplace_back(a, b);
    return from_int_edges(n, e);
}

Graph truncated_regular_tree(int d, int depth) {
    if (d < 2 || depth < 1) throw BadParamError("truncated_regular_tree: d >= 2, depth >= 1 required");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    std::vector<std::pair<int, int>> frontier{{next, 0}}; // (vertex, level)
    std::size_t head = 0;
    while (head < frontier.size()) {
        auto [v, level] = frontier[head++];
        if (level == depth) continue;
        for (int c = 0; c < d - 1; ++c) {
            ++next;
            e.emplace_back(v, next);
            frontier.emplace_back(next, level + 1);
        }
    }
    return from_int_edges(next, e);
}

namespace {

std::vector<std::string> split_colon(std::string_view s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t nxt = s.find(':', pos);
        if (nxt == std::string_view::npos) {
            parts.emplace_back(s.substr(pos));
            break;
        }
        parts.emplace_back(s.substr(pos, nxt - pos));
        pos = nxt + 1;
    }
    return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw BadParamError("missing " + what);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw BadParamError("bad " + what + " '" + s + "'");
    if (s.size() > 18) throw BadParamError(what + " out of range '" + s + "'");
    return std::stoll(s);
}

} // namespace

Graph family_graph(std::string_view spec) {
    auto parts = split_colon(spec);
    if (parts.size() < 2 || parts[0] != "family")
        throw BadParamError("expected family:<tag>:<params>, got '" + std::string(spec) + "'");
    const std::string& tag = parts[1];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        std::size_t got = parts.size() - 2;
        if (got < lo || got > hi)
            throw BadParamError("family " + tag + ": wrong number of parameters");
    };
    if (tag == "line") {
        arity(1, 1);
        return line(static_cast<int>(parse_int(parts[2], "n")));
    }
    if (tag == "cycle") {
        arity(1, 1);
        return cycle(static_cast<int>(parse_int(parts[2], "n")));
    }
    if (tag == "complete") {
        arity(1, 1);
        return complete(static_cast<int>(parse_int(parts[2], "n")));
    }
    if (tag == "kbipartite") {
        arity(2, 2);
        return complete_bipartite(static_cast<int>(parse_int(parts[2], "m")),
                                  static_cast<int>(parse_int(parts[3], "n")));
    }
    if (tag == "star") {
        arity(1, 1);
        return star(static_cast<int>(parse_int(parts[2], "k")));
    }
    if (tag == "randtree") {
        arity(1, 2);
        std::uint64_t seed = parts.size() > 3
                                 ? static_cast<std::uint64_t>(parse_int(parts[3], "seed"))
                                 : 1;
        return random_tree(static_cast<int>(parse_int(parts[2], "n")), seed);
    }
    if (tag == "ttree") {
        arity(2, 2);
        return truncated_regular_tree(static_cast<int>(parse_int(parts[2], "d")),
                                      static_cast<int>(parse_int(parts[3], "depth")));
    }
    throw BadParamError("unknown family tag '" + tag + "'");
}

std::string family_usage() {
    return "family:line:N | family:cycle:N | family:complete:N | family:kbipartite:M:N | "
           "family:star:K | family:randtree:N[:SEED] | family:ttree:D:DEPTH";
}

} // namespace gfr
