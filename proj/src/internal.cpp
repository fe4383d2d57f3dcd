#include "gfr/internal.hpp"

#include <algorithm>
#include <bit>

#include "gfr/io.hpp"

namespace gfr {

namespace {

constexpr int kBruteForceLimit = 20;

void guard_size(const Graph& g, bool force, const char* where) {
    if (g.order() > 63)
        throw TooLargeError(std::string(where) + ": subset enumeration over " +
                            std::to_string(g.order()) + " vertices is not representable");
    if (g.order() > kBruteForceLimit && !force)
        throw TooLargeError(std::string(where) + ": " + std::to_string(g.order()) +
                            " vertices exceeds the brute-force guard of " +
                            std::to_string(kBruteForceLimit) + " (use force to override)");
}

} // namespace

InternalSetReport internal_sets_bruteforce(const Graph& g, std::optional<int> max_size,
                                           bool force, std::size_t list_cap) {
    guard_size(g, force, "internal_sets_bruteforce");
    InternalSetReport rep;
    rep.total_count = 0;
    int n = g.order();
    std::optional<Bitset> least_large; // lexicographically least internal set of size >= 2
    for (std::uint64_t mask = 1; n > 0 && mask < (std::uint64_t{1} << n); ++mask) {
        int size = std::popcount(mask);
        if (max_size && size > *max_size) continue;
        Bitset s = Bitset::from_mask(static_cast<std::size_t>(n), mask);
        if (is_complete_set(g, link_set(g, s))) continue;
        ++*rep.total_count;
        if (rep.sets.size() < list_cap)
            rep.sets.push_back(to_labels(g, s));
        else
            rep.truncated = true;
        if (size == 1) {
            rep.internal_vertices.push_back(g.label(s.first()));
        } else {
            rep.all_singletons = false;
            if (!least_large || set_lex_less(s, *least_large)) least_large = s;
        }
    }
    std::sort(rep.internal_vertices.begin(), rep.internal_vertices.end(), vertex_less);
    if (least_large) rep.witness = to_labels(g, *least_large);
    return rep;
}

InternalSetReport internal_sets_fast(const Graph& g) {
    InternalSetReport rep;
    int n = g.order();
    for (int x = 0; x < n && rep.all_singletons; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            Bitset common = g.neighbors(x) & g.neighbors(y);
            if (common.count() >= 2) {
                rep.all_singletons = false;
                rep.witness = to_labels(g, common);
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!is_complete_set(g, g.neighbors(v))) {
            rep.internal_vertices.push_back(g.label(v));
            rep.sets.push_back({g.label(v)});
        }
    return rep;
}

std::vector<VertexId> internal_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (int v = 0; v < g.order(); ++v)
        if (!is_complete_set(g, g.neighbors(v))) out.push_back(g.label(v));
    return out;
}

Graph internal_graph(const Graph& g) { return induced_subgraph(g, internal_vertices(g)); }

LinkConditionResult link_condition(const Graph& g) {
    for (int w = 0; w < g.order(); ++w) {
        auto nbrs = g.neighbors(w).indices();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
                    int a = nbrs[i], b = nbrs[j], c = nbrs[k];
                    int edges = static_cast<int>(g.adjacent(a, b)) +
                                static_cast<int>(g.adjacent(a, c)) +
                                static_cast<int>(g.adjacent(b, c));
                    if (edges != 2) continue;
                    // Induced 3-path: report endpoints and midpoint.
                    LinkConditionWitness wit;
                    wit.center = g.label(w);
                    if (!g.adjacent(a, b)) {
                        wit.path_a = g.label(a);
                        wit.path_mid = g.label(c);
                        wit.path_b = g.label(b);
                    } else if (!g.adjacent(a, c)) {
                        wit.path_a = g.label(a);
                        wit.path_mid = g.label(b);
                        wit.path_b = g.label(c);
                    } else {
                        wit.path_a = g.label(b);
                        wit.path_mid = g.label(a);
                        wit.path_b = g.label(c);
                    }
                    return {false, wit, std::nullopt};
                }
    }
    return {true, std::nullopt, std::nullopt};
}

LinkConditionResult link_condition_bruteforce(const Graph& g, bool force) {
    guard_size(g, force, "link_condition_bruteforce");
    int n = g.order();
    for (std::uint64_t mask = 1; n > 0 && mask < (std::uint64_t{1} << n); ++mask) {
        Bitset s = Bitset::from_mask(static_cast<std::size_t>(n), mask);
        if (link_set(g, s).none()) continue;
        Graph sub = induced_subgraph(g, s);
        for (const auto& comp : connected_component_sets(sub))
            if (!is_complete_set(sub, comp))
                return {false, std::nullopt, to_labels(g, s)};
    }
    return {true, std::nullopt, std::nullopt};
}

namespace {

bool is_four_cycle(const Graph& g) {
    if (g.order() != 4 || g.edge_count() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

} // namespace

HRigidityReport is_h_rigid(const Graph& g, bool use_oracle) {
    HRigidityReport rep;
    rep.locally_finite = true;

    InternalSetReport sets = use_oracle ? internal_sets_bruteforce(g) : internal_sets_fast(g);
    rep.internal_sets_are_vertices = sets.all_singletons;
    rep.internal_set_witness = sets.witness;

    LinkConditionResult lc = use_oracle ? link_condition_bruteforce(g) : link_condition(g);
    rep.link_condition_holds = lc.holds;
    rep.link_witness = lc.witness;

    rep.h_rigid = rep.locally_finite && rep.internal_sets_are_vertices && rep.link_condition_holds;
    rep.connected = is_connected(g);
    rep.int_graph_well_defined = rep.internal_sets_are_vertices;
    rep.int_vertices = internal_vertices(g);
    rep.graph_radius = radius(g);

    if (!rep.internal_sets_are_vertices && is_four_cycle(g)) {
        rep.note =
            "known discrepancy: this graph is a 4-cycle, whose opposite-vertex pairs are "
            "internal sets of size 2, so it fails the singleton-internal-set condition even "
            "though every longer cycle satisfies it; see README, 'Known discrepancy: the "
            "4-cycle'";
    }
    return rep;
}

bool check_external_adjacency(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is connected");
    if (!internal_sets_fast(g).all_singletons)
        throw PreconditionError("all internal sets are internal vertices");
    auto internal = internal_vertices(g);
    if (internal.empty()) throw PreconditionError("internal graph is non-empty");
    Bitset int_set = to_vertex_set(g, internal);
    for (int v = 0; v < g.order(); ++v) {
        if (int_set.test(static_cast<std::size_t>(v))) continue;
        if (!g.neighbors(v).intersects(int_set)) return false;
    }
    return true;
}

bool check_radius_bound(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is connected");
    if (!internal_sets_fast(g).all_singletons)
        throw PreconditionError("all internal sets are internal vertices");
    return radius(g) <= radius(internal_graph(g)) + ExtNat(1);
}

nlohmann::json report_to_json(const HRigidityReport& r) {
    nlohmann::json j;
    j["h_rigid"] = r.h_rigid;
    j["conditions"] = {
        {"locally_finite", r.locally_finite},
        {"internal_sets_are_vertices", r.internal_sets_are_vertices},
        {"link_condition", r.link_condition_holds},
    };
    nlohmann::json wit = nlohmann::json::object();
    if (r.internal_set_witness) wit["internal_set"] = *r.internal_set_witness;
    if (r.link_witness)
        wit["link"] = {{"center", r.link_witness->center},
                       {"path", {r.link_witness->path_a, r.link_witness->path_mid,
                                 r.link_witness->path_b}}};
    j["witnesses"] = wit;
    j["int_vertices"] = r.int_vertices;
    j["radius"] = ext_nat_to_json(r.graph_radius);
    j["connected"] = r.connected;
    j["int_graph_well_defined"] = r.int_graph_well_defined;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace gfr
