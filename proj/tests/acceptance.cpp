// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gfr/catalog.hpp"
#include "gfr/distinguish.hpp"
#include "gfr/factor.hpp"
#include "gfr/families.hpp"
#include "gfr/internal.hpp"
#include "gfr/io.hpp"
#include "gfr/isomorphism.hpp"
#include "gfr/verify.hpp"

using namespace gfr;

namespace {

struct Criterion {
    int id;
    std::string summary;
    double budget_seconds;
    std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

std::string labels_str(const std::vector<VertexId>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i];
    }
    return out + "}";
}

// 1. Internal vertices of the 5-path and the 5-cycle, exactly.
void criterion1(std::vector<std::string>& failures) {
    expect(failures, internal_vertices(line(5)) == std::vector<VertexId>{"2", "3", "4"},
           "internal vertices of line(5) != {2,3,4}: got " +
               labels_str(internal_vertices(line(5))));
    expect(failures,
           internal_vertices(cycle(5)) == std::vector<VertexId>{"1", "2", "3", "4", "5"},
           "internal vertices of cycle(5) != all five vertices: got " +
               labels_str(internal_vertices(cycle(5))));
}

// 2. Rigidity battery: lines, cycles, 500 seeded random trees; the 4-cycle
//    must fail with witness {2,4} and a discrepancy note.
void criterion2(std::vector<std::string>& failures) {
    for (int n = 2; n <= 10; ++n)
        expect(failures, is_h_rigid(line(n)).h_rigid,
               "line(" + std::to_string(n) + ") not rigid");
    expect(failures, is_h_rigid(cycle(3)).h_rigid, "cycle(3) not rigid");
    for (int n = 5; n <= 10; ++n)
        expect(failures, is_h_rigid(cycle(n)).h_rigid,
               "cycle(" + std::to_string(n) + ") not rigid");

    for (int i = 0; i < 500; ++i) {
        int n = 2 + (i % 13); // 2..14
        Graph t = random_tree(n, 1000 + static_cast<std::uint64_t>(i));
        if (!is_h_rigid(t).h_rigid) {
            failures.push_back("random tree sample " + std::to_string(i) + " not rigid:\n" +
                               to_edge_list_text(t));
            return;
        }
    }

    auto rep = is_h_rigid(cycle(4));
    expect(failures, !rep.h_rigid, "cycle(4) unexpectedly rigid");
    expect(failures,
           rep.internal_set_witness &&
               *rep.internal_set_witness == std::vector<VertexId>{"2", "4"},
           "cycle(4) witness is not {2,4}");
    expect(failures,
           !rep.note.empty() && rep.note.find("discrepancy") != std::string::npos,
           "cycle(4) report lacks the discrepancy note");
}

// 3. Oracle equivalence over the exhaustive catalog of graphs on <= 7
//    vertices: both fast paths agree with the subset brute force.
void criterion3(std::vector<std::string>& failures) {
    SuiteOptions opts;
    opts.max_n = 7;
    SuiteResult res = run_suite("oracle", opts);
    expect(failures, res.checked == 1253,
           "catalog size " + std::to_string(res.checked) + " != 1253");
    for (const auto& f : res.failures) failures.push_back(f.description + "\n" + f.graph);
}

// 4. External-adjacency and radius-bound properties over 300 random
//    connected graphs with singleton internal sets.
void criterion4(std::vector<std::string>& failures) {
    SuiteOptions opts;
    opts.samples = 300;
    opts.seed = 42;
    for (const char* name : {"prop42", "lemma43"}) {
        SuiteResult res = run_suite(name, opts);
        expect(failures, res.checked == 300,
               std::string(name) + " checked " + std::to_string(res.checked) + " != 300");
        for (const auto& f : res.failures) failures.push_back(f.description + "\n" + f.graph);
    }
}

// 5. The rewrite identities on the concrete values.
void criterion5(std::vector<std::string>& failures) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<FactorExpr> kids;
        for (int i = 0; i < n; ++i) kids.push_back(FactorExpr::r());
        auto res = simplify(FactorExpr::free_product(std::move(kids)));
        expect(failures, expr_eq(res.expr, FactorExpr::fgf(Rational(n))),
               "free product of " + std::to_string(n) + " copies of R is " + to_text(res.expr));
    }
    expect(failures, to_text(graph_to_expression(line(3))) == "T[R, LF(2)]",
           "expression of line(3) is " + to_text(graph_to_expression(line(3))));
    expect(failures, amplify_fgf(Rational(3), Rational(2)) == Rational(2),
           "amplify(3, 2) != 2");
    expect(failures, amplify_fgf(Rational(3), Rational(1, 2)) == Rational(5),
           "amplify(3, 1/2) != 5");
}

// 6. Distinguisher sweep: the bipartite pair with a replaying certificate,
//    line and cycle separations, complete-graph collapses.
void criterion6(std::vector<std::string>& failures) {
    Verdict kb = distinguish(complete_bipartite(3, 3), complete_bipartite(2, 5));
    expect(failures, kb.kind == VerdictKind::IsomorphicFactors,
           "K_{3,3} vs K_{2,5}: kind " + to_string(kb.kind));
    expect(failures, kb.basis == VerdictBasis::FactorCalculus,
           "K_{3,3} vs K_{2,5}: basis " + to_string(kb.basis));
    expect(failures, kb.certificate && replay_trace(kb.expr1, kb.expr2, *kb.certificate),
           "K_{3,3} vs K_{2,5}: certificate missing or does not replay");

    for (int n = 2; n <= 8; ++n)
        for (int m = n + 1; m <= 8; ++m) {
            Verdict v = distinguish(line(n), line(m));
            expect(failures,
                   v.kind == VerdictKind::NotIsomorphic && v.basis == VerdictBasis::Theorem47,
                   "line(" + std::to_string(n) + ") vs line(" + std::to_string(m) + "): " +
                       to_string(v.kind) + "/" + to_string(v.basis));
        }

    for (int n = 5; n <= 9; ++n)
        for (int m = n + 1; m <= 9; ++m) {
            Verdict v = distinguish(cycle(n), cycle(m));
            expect(failures, v.kind == VerdictKind::NotIsomorphic,
                   "cycle(" + std::to_string(n) + ") vs cycle(" + std::to_string(m) +
                       "): " + to_string(v.kind));
        }

    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            Verdict v = distinguish(complete(i), complete(j));
            expect(failures, v.kind == VerdictKind::IsomorphicFactors,
                   "K_" + std::to_string(i) + " vs K_" + std::to_string(j) + ": " +
                       to_string(v.kind));
        }
}

// 7. Radius consistency over 200 pairs of connected rigid graphs with
//    isomorphic internal graphs.
void criterion7(std::vector<std::string>& failures) {
    SuiteOptions opts;
    opts.samples = 200;
    opts.seed = 7;
    SuiteResult res = run_suite("cor411", opts);
    expect(failures, res.checked == 200,
           "cor411 checked " + std::to_string(res.checked) + " != 200");
    for (const auto& f : res.failures) failures.push_back(f.description + "\n" + f.graph);
}

// 8. Soundness audits over the criterion-6 verdicts plus the pinned UNKNOWN.
void criterion8(std::vector<std::string>& failures) {
    for (int n = 2; n <= 8; ++n)
        for (int m = n + 1; m <= 8; ++m) {
            Verdict v = distinguish(line(n), line(m));
            if (v.kind != VerdictKind::NotIsomorphic) continue;
            expect(failures, v.report1.h_rigid && v.report2.h_rigid,
                   "separation without two rigidity reports: line(" + std::to_string(n) +
                       ") vs line(" + std::to_string(m) + ")");
        }
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            Verdict v = distinguish(complete(i), complete(j));
            bool proof = false;
            if (v.graph_iso) proof = verify_mapping(complete(i), complete(j), *v.graph_iso);
            if (!proof && v.certificate) proof = replay_trace(v.expr1, v.expr2, *v.certificate);
            expect(failures, v.kind == VerdictKind::IsomorphicFactors && proof,
                   "complete-graph verdict lacks a verifiable certificate: K_" +
                       std::to_string(i) + " vs K_" + std::to_string(j));
        }

    Verdict stars = distinguish(star(3), star(4));
    expect(failures, stars.kind == VerdictKind::Unknown,
           "star(3) vs star(4) escalated to " + to_string(stars.kind));
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "internal vertices of line(5) and cycle(5)", 1.0, criterion1},
        {2, "rigidity battery with the whitelisted 4-cycle", 30.0, criterion2},
        {3, "fast paths match brute force on all graphs up to 7 vertices", 300.0, criterion3},
        {4, "external-adjacency and radius-bound properties, 300 samples", 60.0, criterion4},
        {5, "rewrite identities and exact amplification values", 1.0, criterion5},
        {6, "distinguisher sweep with certificates", 10.0, criterion6},
        {7, "radius consistency over 200 matched rigid pairs", 120.0, criterion7},
        {8, "soundness audits and the pinned unknown", 10.0, criterion8},
    };

    int failed = 0;
    for (auto& c : criteria) {
        std::vector<std::string> failures;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds)
            failures.push_back("over budget: " + std::to_string(elapsed) + "s > " +
                               std::to_string(c.budget_seconds) + "s");
        if (failures.empty()) {
            std::printf("criterion %d: PASS (%.2fs/%.0fs) -- %s\n", c.id, elapsed,
                        c.budget_seconds, c.summary.c_str());
        } else {
            ++failed;
            std::printf("criterion %d: FAIL -- %s\n", c.id, c.summary.c_str());
            for (const auto& f : failures) std::printf("    %s\n", f.c_str());
        }
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
