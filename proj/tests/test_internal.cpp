#include "doctest.h"

#include <algorithm>
#include <random>

#include "gfr/catalog.hpp"
#include "gfr/families.hpp"
#include "gfr/internal.hpp"
#include "gfr/io.hpp"

using namespace gfr;

namespace {

using Labels = std::vector<VertexId>;
using SetList = std::vector<Labels>;

Graph z4() { return cycle(4); }

Graph wheel4() {
    // 4-cycle plus a hub adjacent to everything
    return Graph::from_edge_list(
        {"1", "2", "3", "4", "h"},
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"h", "1"}, {"h", "2"}, {"h", "3"}, {"h", "4"}});
}

bool contains_set(const SetList& sets, const Labels& s) {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
}

// A witness must itself be an internal set: non-empty with a non-complete link.
bool witness_is_internal(const Graph& g, const Labels& s) {
    return !s.empty() && !is_complete(g, link(g, s));
}

Graph random_graph(int n, int percent, std::mt19937_64& eng) {
    Labels labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (eng() % 100 < static_cast<std::uint64_t>(percent))
                edges.emplace_back(std::to_string(u), std::to_string(v));
    return Graph::from_edge_list(labels, edges);
}

} // namespace

TEST_SUITE_BEGIN("internal");

TEST_CASE("brute force finds exactly the singleton internal sets of the path") {
    auto rep = internal_sets_bruteforce(line(5));
    CHECK(rep.all_singletons);
    CHECK_FALSE(rep.witness);
    CHECK(rep.internal_vertices == Labels{"2", "3", "4"});
    CHECK(contains_set(rep.sets, {"2"}));
    CHECK(contains_set(rep.sets, {"3"}));
    CHECK(contains_set(rep.sets, {"4"}));
    CHECK(*rep.total_count == 3);
}

TEST_CASE("brute force sees the 4-cycle's pair sets") {
    auto rep = internal_sets_bruteforce(z4());
    CHECK_FALSE(rep.all_singletons);
    REQUIRE(rep.witness);
    CHECK(witness_is_internal(z4(), *rep.witness));
    CHECK(rep.witness->size() == 2);
    CHECK(contains_set(rep.sets, {"2", "4"}));
    CHECK(contains_set(rep.sets, {"1", "3"}));
    CHECK(rep.internal_vertices == Labels{"1", "2", "3", "4"});
}

TEST_CASE("complete graphs have no internal sets") {
    for (int n = 1; n <= 8; ++n) {
        auto rep = internal_sets_bruteforce(complete(n));
        CHECK(rep.all_singletons);
        CHECK(rep.internal_vertices.empty());
        CHECK(*rep.total_count == 0);
    }
}

TEST_CASE("brute force size guard") {
    Graph big = line(21);
    CHECK_THROWS_AS(internal_sets_bruteforce(big), TooLargeError);
    CHECK_NOTHROW(internal_sets_bruteforce(big, std::nullopt, /*force=*/true));
}

TEST_CASE("max_size bounds the enumeration") {
    auto rep = internal_sets_bruteforce(z4(), 1);
    CHECK(rep.internal_vertices == Labels{"1", "2", "3", "4"});
    CHECK(*rep.total_count == 4); // pairs not enumerated
}

TEST_CASE("fast path on the named examples") {
    CHECK(internal_sets_fast(line(6)).all_singletons);

    auto z = internal_sets_fast(z4());
    CHECK_FALSE(z.all_singletons);
    REQUIRE(z.witness);
    CHECK(*z.witness == Labels{"2", "4"}); // common neighborhood of the pair (1,3)

    auto k33 = internal_sets_fast(complete_bipartite(3, 3));
    CHECK_FALSE(k33.all_singletons);
    REQUIRE(k33.witness);
    CHECK(k33.witness->size() == 3); // one side, the common neighborhood of the other side's pair
    CHECK(witness_is_internal(complete_bipartite(3, 3), *k33.witness));
}

TEST_CASE("internal vertices of the named examples") {
    CHECK(internal_vertices(line(5)) == Labels{"2", "3", "4"});
    CHECK(internal_vertices(cycle(5)) == Labels{"1", "2", "3", "4", "5"});
    for (int n = 1; n <= 8; ++n) CHECK(internal_vertices(complete(n)).empty());
}

TEST_CASE("internal graph") {
    CHECK(internal_graph(line(5)) == induced_subgraph(line(5), Labels{"2", "3", "4"}));
    CHECK(internal_graph(line(2)).order() == 0);
    CHECK(internal_graph(cycle(6)) == cycle(6));
}

TEST_CASE("link condition fast path") {
    for (int n = 2; n <= 8; ++n) CHECK(link_condition(line(n)).holds);
    CHECK(link_condition(star(3)).holds);

    auto w = link_condition(wheel4());
    CHECK_FALSE(w.holds);
    REQUIRE(w.witness);
    // witness validity: an induced 3-path inside the center's neighborhood
    const auto& wit = *w.witness;
    Graph g = wheel4();
    CHECK(g.adjacent(wit.center, wit.path_a));
    CHECK(g.adjacent(wit.center, wit.path_mid));
    CHECK(g.adjacent(wit.center, wit.path_b));
    CHECK(g.adjacent(wit.path_a, wit.path_mid));
    CHECK(g.adjacent(wit.path_mid, wit.path_b));
    CHECK_FALSE(g.adjacent(wit.path_a, wit.path_b));

    auto bf = link_condition_bruteforce(wheel4());
    CHECK_FALSE(bf.holds);
    REQUIRE(bf.failing_subset);
    Graph sub = induced_subgraph(g, *bf.failing_subset);
    bool some_component_incomplete = false;
    for (const auto& comp : connected_component_sets(sub))
        if (!is_complete_set(sub, comp)) some_component_incomplete = true;
    CHECK(some_component_incomplete);
    CHECK(!link(g, *bf.failing_subset).empty());
}

TEST_CASE("rigidity of the named examples") {
    CHECK(is_h_rigid(line(4)).h_rigid);
    CHECK(is_h_rigid(complete(1)).h_rigid);

    auto k33 = is_h_rigid(complete_bipartite(3, 3));
    CHECK_FALSE(k33.h_rigid);
    CHECK_FALSE(k33.internal_sets_are_vertices);
    REQUIRE(k33.internal_set_witness);
    CHECK(witness_is_internal(complete_bipartite(3, 3), *k33.internal_set_witness));

    auto z = is_h_rigid(z4());
    CHECK_FALSE(z.h_rigid);
    REQUIRE(z.internal_set_witness);
    CHECK(*z.internal_set_witness == Labels{"2", "4"});
    CHECK_FALSE(z.note.empty());
    CHECK(z.note.find("discrepancy") != std::string::npos);
    CHECK(z.note.find("4-cycle") != std::string::npos);

    // A relabeled 4-cycle gets the same note.
    Graph z_relabeled = Graph::from_edge_list(
        {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    CHECK_FALSE(is_h_rigid(z_relabeled).note.empty());

    // Other failures do not.
    CHECK(is_h_rigid(complete_bipartite(3, 3)).note.empty());

    for (int n = 1; n <= 8; ++n) {
        auto rep = is_h_rigid(complete(n));
        CHECK(rep.h_rigid);
        CHECK(rep.int_vertices.empty());
    }
}

TEST_CASE("oracle flag routes through the brute force") {
    auto fast = is_h_rigid(z4());
    auto oracled = is_h_rigid(z4(), /*use_oracle=*/true);
    CHECK(fast.h_rigid == oracled.h_rigid);
    CHECK(fast.internal_sets_are_vertices == oracled.internal_sets_are_vertices);
    CHECK(fast.link_condition_holds == oracled.link_condition_holds);
}

TEST_CASE("fast paths agree with brute force exhaustively up to 6 vertices") {
    for (const Graph& g : nonisomorphic_graphs_up_to(6)) {
        auto fast = internal_sets_fast(g);
        auto brute = internal_sets_bruteforce(g);
        CHECK(fast.all_singletons == brute.all_singletons);
        CHECK(fast.internal_vertices == brute.internal_vertices);
        CHECK(internal_vertices(g) == brute.internal_vertices);
        CHECK(link_condition(g).holds == link_condition_bruteforce(g).holds);
    }
}

TEST_CASE("fast paths agree with brute force on random graphs of 8 to 14 vertices") {
    std::mt19937_64 eng(41);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 8 + static_cast<int>(eng() % 7);
        Graph g = random_graph(n, 10 + static_cast<int>(eng() % 40), eng);
        auto fast = internal_sets_fast(g);
        auto brute = internal_sets_bruteforce(g);
        CHECK(fast.all_singletons == brute.all_singletons);
        CHECK(fast.internal_vertices == brute.internal_vertices);
        CHECK(link_condition(g).holds == link_condition_bruteforce(g).holds);
    }
}

TEST_CASE("external vertices neighbor internal ones") {
    CHECK(check_external_adjacency(line(5)));
    CHECK(check_external_adjacency(star(3)));
    CHECK_THROWS_AS(check_external_adjacency(complete(4)), PreconditionError);
    CHECK_THROWS_AS(check_external_adjacency(disjoint_union(line(3), line(3))),
                    PreconditionError);
    CHECK_THROWS_AS(check_external_adjacency(z4()), PreconditionError);
}

TEST_CASE("radius bound") {
    CHECK(check_radius_bound(line(5))); // 2 <= 1+1
    CHECK(check_radius_bound(line(2))); // 1 <= 0+1, empty internal graph
    CHECK(check_radius_bound(cycle(6)));
    CHECK_THROWS_AS(check_radius_bound(disjoint_union(line(3), line(3))), PreconditionError);
}

TEST_CASE("both checks hold on random connected singleton-set graphs") {
    std::mt19937_64 eng(43);
    int accepted = 0;
    for (int iter = 0; iter < 2000 && accepted < 120; ++iter) {
        int n = 4 + static_cast<int>(eng() % 8);
        Graph g = (iter % 2 == 0) ? random_tree(n, eng())
                                  : random_graph(n, 20 + static_cast<int>(eng() % 25), eng);
        if (!is_connected(g) || !internal_sets_fast(g).all_singletons) continue;
        ++accepted;
        CHECK(check_radius_bound(g));
        if (!internal_vertices(g).empty()) CHECK(check_external_adjacency(g));
    }
    CHECK(accepted == 120);
}

TEST_CASE("adding an edge outside a neighborhood keeps the vertex internal") {
    std::mt19937_64 eng(47);
    int tested = 0;
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = random_graph(8, 30, eng);
        auto nonedges = complement(g).edges();
        if (nonedges.empty()) continue;
        auto [a, b] = nonedges[eng() % nonedges.size()];
        auto edges = g.edges();
        edges.emplace_back(a, b);
        Graph g2 = Graph::from_edge_list(g.vertices(), edges);
        for (const auto& v : internal_vertices(g)) {
            int vi = g.index_of(v);
            auto inside = [&](const VertexId& x) {
                auto xi = g.find(x);
                return xi && g.neighbors(vi).test(static_cast<std::size_t>(*xi));
            };
            if (inside(a) && inside(b)) continue; // edge lands inside N(v)
            auto iv2 = internal_vertices(g2);
            CHECK(std::find(iv2.begin(), iv2.end(), v) != iv2.end());
            ++tested;
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("report serialization shape") {
    auto j = report_to_json(is_h_rigid(z4()));
    CHECK(j["h_rigid"] == false);
    CHECK(j["conditions"]["locally_finite"] == true);
    CHECK(j["conditions"]["internal_sets_are_vertices"] == false);
    CHECK(j["conditions"]["link_condition"] == true);
    CHECK(j["witnesses"]["internal_set"] == nlohmann::json({"2", "4"}));
    CHECK(j["int_vertices"].size() == 4);
    CHECK(j["radius"] == 2);
    CHECK(j.contains("note"));

    auto disconnected = report_to_json(is_h_rigid(disjoint_union(line(2), line(2))));
    CHECK(disconnected["radius"] == "inf");
    CHECK(disconnected["connected"] == false);
}

TEST_SUITE_END();
