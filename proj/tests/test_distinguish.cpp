#include "doctest.h"

#include <random>

#include "gfr/catalog.hpp"
#include "gfr/distinguish.hpp"
#include "gfr/families.hpp"

using namespace gfr;

TEST_SUITE_BEGIN("distinguish");

TEST_CASE("lines of different lengths separate through their internal graphs") {
    Verdict v = distinguish(line(4), line(5));
    CHECK(v.kind == VerdictKind::NotIsomorphic);
    CHECK(v.basis == VerdictBasis::Theorem47);
    CHECK(v.report1.h_rigid);
    CHECK(v.report2.h_rigid);
    REQUIRE(v.int1);
    REQUIRE(v.int2);
    CHECK(v.int1->order() == 2);
    CHECK(v.int2->order() == 3);
}

TEST_CASE("the bipartite pair is certified isomorphic") {
    Verdict v = distinguish(complete_bipartite(3, 3), complete_bipartite(2, 5));
    CHECK(v.kind == VerdictKind::IsomorphicFactors);
    CHECK(v.basis == VerdictBasis::FactorCalculus);
    REQUIRE(v.certificate);
    CHECK(replay_trace(v.expr1, v.expr2, *v.certificate));
}

TEST_CASE("complete graphs are indistinguishable") {
    Verdict v = distinguish(complete(3), complete(7));
    CHECK(v.kind == VerdictKind::IsomorphicFactors);
    CHECK(v.basis == VerdictBasis::FactorCalculus);
    REQUIRE(v.certificate);
    CHECK(replay_trace(v.expr1, v.expr2, *v.certificate));
}

TEST_CASE("stars of different sizes stay unknown") {
    Verdict v = distinguish(star(3), star(4));
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.basis == VerdictBasis::None);
    CHECK(v.report1.h_rigid);
    CHECK(v.report2.h_rigid);
    CHECK(to_text(v.expr1) == "T[R, LF(3)]");
    CHECK(to_text(v.expr2) == "T[R, LF(4)]");
}

TEST_CASE("identical graphs are graph-isomorphic") {
    std::vector<Graph> sample{line(5), cycle(6), star(4), complete(3),
                              disjoint_union(line(3), cycle(5)),
                              Graph::from_edge_list({}, {})};
    for (const auto& g : sample) {
        Verdict v = distinguish(g, g);
        CHECK(v.kind == VerdictKind::IsomorphicFactors);
        CHECK(v.basis == VerdictBasis::GraphIsomorphic);
        REQUIRE(v.graph_iso);
        CHECK(verify_mapping(g, g, *v.graph_iso));
    }
}

TEST_CASE("the 4-cycle never reaches the rigidity rules") {
    Verdict v = distinguish(cycle(4), cycle(5));
    CHECK(v.kind == VerdictKind::Unknown); // cycle(5) is rigid, so not INAPPLICABLE
    CHECK(v.basis == VerdictBasis::None);
    CHECK_FALSE(v.report1.h_rigid);
    CHECK_FALSE(v.report1.note.empty());
    bool note_surfaced = false;
    for (const auto& n : v.evidence["notes"])
        if (n.get<std::string>().find("discrepancy") != std::string::npos) note_surfaced = true;
    CHECK(note_surfaced);

    Verdict w = distinguish(cycle(4), complete_bipartite(3, 4));
    CHECK(w.kind == VerdictKind::Inapplicable); // neither side is rigid
    CHECK(w.basis == VerdictBasis::None);
}

TEST_CASE("disconnected rigid graphs are handled conservatively") {
    Graph forest = disjoint_union(line(3), line(3));
    CHECK(is_h_rigid(forest).h_rigid); // rigidity itself holds
    Verdict v = distinguish(forest, line(6));
    CHECK(v.kind == VerdictKind::Unknown); // connectivity gate keeps the theorem off
}

TEST_CASE("verdicts are symmetric") {
    std::vector<Graph> pool{line(4),   line(6),     cycle(5), cycle(4),  star(3),
                            star(4),   complete(4), line(2),  random_tree(8, 3),
                            complete_bipartite(3, 3)};
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            Verdict a = distinguish(pool[i], pool[j]);
            Verdict b = distinguish(pool[j], pool[i]);
            CHECK(a.kind == b.kind);
            CHECK(a.basis == b.basis);
        }
}

TEST_CASE("soundness gates on every verdict from a mixed pool") {
    std::vector<Graph> pool{line(2), line(4), line(7), cycle(5), cycle(8),
                            star(5), complete(5), random_tree(9, 1), random_tree(9, 2),
                            complete_bipartite(2, 5)};
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            Verdict v = distinguish(pool[i], pool[j]);
            if (v.kind == VerdictKind::NotIsomorphic) {
                CHECK(v.report1.h_rigid);
                CHECK(v.report2.h_rigid);
                CHECK(v.report1.connected);
                CHECK(v.report2.connected);
            }
            if (v.kind == VerdictKind::IsomorphicFactors) {
                bool has_proof = false;
                if (v.graph_iso) has_proof = verify_mapping(pool[i], pool[j], *v.graph_iso);
                if (!has_proof && v.certificate)
                    has_proof = replay_trace(v.expr1, v.expr2, *v.certificate);
                CHECK(has_proof);
            }
        }
}

TEST_CASE("catalog classification of complete graphs") {
    CatalogReport rep = classify_catalog({complete(2), complete(3), complete(4)});
    REQUIRE(rep.classes.size() == 1);
    CHECK(rep.classes[0] == std::vector<int>{0, 1, 2});
    for (const auto& row : rep.kinds)
        for (auto k : row) CHECK(k == VerdictKind::IsomorphicFactors);
}

TEST_CASE("catalog classification of lines") {
    std::vector<Graph> lines;
    for (int n = 2; n <= 7; ++n) lines.push_back(line(n));
    CatalogReport rep = classify_catalog(lines);
    CHECK(rep.classes.size() == 6);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < lines.size(); ++j)
            if (i != j) CHECK(rep.kinds[i][j] == VerdictKind::NotIsomorphic);
}

TEST_CASE("catalog classification of cycles") {
    CatalogReport rep = classify_catalog({cycle(5), cycle(6), cycle(7)},
                                         {"c5", "c6", "c7"});
    CHECK(rep.classes.size() == 3);
    CHECK(rep.names == std::vector<std::string>{"c5", "c6", "c7"});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(rep.kinds[i][j] == VerdictKind::NotIsomorphic);
}

TEST_CASE("verdict json carries the schema and both reports") {
    auto j = verdict_to_json(distinguish(line(4), line(5)));
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "NOT_ISOMORPHIC");
    CHECK(j["basis"] == "THEOREM_4_7");
    CHECK(j["reports"]["g1"]["h_rigid"] == true);
    CHECK(j["reports"]["g2"]["h_rigid"] == true);
    CHECK(j["evidence"].contains("int_g1"));

    auto iso = verdict_to_json(distinguish(complete(3), complete(3)));
    CHECK(iso["kind"] == "ISOMORPHIC_FACTORS");
    CHECK(iso["basis"] == "GRAPH_ISOMORPHIC");
    CHECK(iso["evidence"].contains("mapping"));
}

TEST_SUITE_END();
