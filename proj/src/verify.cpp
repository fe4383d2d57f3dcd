#include "gfr/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "gfr/catalog.hpp"
#include "gfr/distinguish.hpp"
#include "gfr/errors.hpp"
#include "gfr/families.hpp"
#include "gfr/internal.hpp"
#include "gfr/io.hpp"
#include "gfr/isomorphism.hpp"

namespace gfr {

namespace {

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull + 1);
    eng.discard(8);
    return eng;
}

int rint(std::mt19937_64& eng, int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

Graph random_graph(int n, int edge_percent, std::mt19937_64& eng) {
    std::vector<VertexId> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rint(eng, 100) < edge_percent)
                edges.emplace_back(std::to_string(u), std::to_string(v));
    return Graph::from_edge_list(labels, edges);
}

// Connected graph whose internal sets are all singletons; sparse random
// graphs are rejection-sampled with a random tree as fallback.
Graph sample_singleton_graph(std::uint64_t seed, std::uint64_t index) {
    auto eng = rng_for(seed, index);
    int n = 3 + rint(eng, 10);
    if (index % 2 == 0) return random_tree(n, eng());
    for (int attempt = 0; attempt < 200; ++attempt) {
        int percent = 15 + rint(eng, 30);
        Graph g = random_graph(n, percent, eng);
        if (is_connected(g) && internal_sets_fast(g).all_singletons) return g;
    }
    return random_tree(n, eng());
}

// Deterministic parallel map: results land by index regardless of schedule.
template <class F>
std::vector<SuiteFailure> parallel_collect(int count, int jobs, F&& body) {
    std::vector<std::vector<SuiteFailure>> slots(static_cast<std::size_t>(count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) slots[static_cast<std::size_t>(i)] = body(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t workers = static_cast<std::size_t>(std::min(jobs, count > 0 ? count : 1));
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers))
                    slots[static_cast<std::size_t>(i)] = body(i);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<SuiteFailure> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

SuiteResult run_prop42(const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "prop42";
    res.failures = parallel_collect(opts.samples, opts.jobs, [&](int i) {
        std::vector<SuiteFailure> fails;
        Graph g = sample_singleton_graph(opts.seed, static_cast<std::uint64_t>(i));
        if (internal_vertices(g).empty()) return fails; // complete graph: hypothesis empty
        try {
            if (!check_external_adjacency(g))
                fails.push_back({"external vertex with no internal neighbor (sample " +
                                     std::to_string(i) + ")",
                                 to_edge_list_text(g)});
        } catch (const PreconditionError& e) {
            fails.push_back({std::string("sampler produced an invalid instance: ") + e.what(),
                             to_edge_list_text(g)});
        }
        return fails;
    });
    res.checked = opts.samples;
    return res;
}

SuiteResult run_lemma43(const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "lemma43";
    res.failures = parallel_collect(opts.samples, opts.jobs, [&](int i) {
        std::vector<SuiteFailure> fails;
        Graph g = sample_singleton_graph(opts.seed, static_cast<std::uint64_t>(i));
        try {
            if (!check_radius_bound(g))
                fails.push_back({"radius exceeds internal-graph radius + 1 (sample " +
                                     std::to_string(i) + ")",
                                 to_edge_list_text(g)});
        } catch (const PreconditionError& e) {
            fails.push_back({std::string("sampler produced an invalid instance: ") + e.what(),
                             to_edge_list_text(g)});
        }
        return fails;
    });
    res.checked = opts.samples;
    return res;
}

SuiteResult run_cor411(const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "cor411";

    // Pool of connected rigid graphs, grouped by internal-graph isomorphism.
    std::vector<Graph> pool;
    for (int n = 2; n <= 10; ++n) pool.push_back(line(n));
    for (int n = 3; n <= 12; ++n)
        if (n != 4) pool.push_back(cycle(n));
    for (int d = 2; d <= 4; ++d)
        for (int depth = 1; depth <= 3; ++depth) pool.push_back(truncated_regular_tree(d, depth));

    std::vector<std::pair<Graph, Graph>> pairs; // with isomorphic internal graphs
    std::uint64_t tree_index = 0;
    auto eng = rng_for(opts.seed, 0x411);
    while (static_cast<int>(pairs.size()) < opts.samples && tree_index < 5000) {
        // Top the pool up with random trees until enough matched pairs exist.
        for (int burst = 0; burst < 40; ++burst) {
            int n = 3 + rint(eng, 12);
            pool.push_back(random_tree(n, opts.seed ^ (0x5bd1e995ull * ++tree_index)));
        }
        std::vector<Graph> ints;
        std::vector<int> keep;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            auto rep = is_h_rigid(pool[i]);
            if (rep.h_rigid && rep.connected) {
                keep.push_back(static_cast<int>(i));
                ints.push_back(internal_graph(pool[i]));
            }
        }
        // Group by internal-graph isomorphism within fingerprint buckets.
        std::map<Fingerprint, std::vector<std::vector<int>>> groups;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            auto& bucket = groups[fingerprint(ints[k])];
            bool placed = false;
            for (auto& cls : bucket)
                if (are_isomorphic(ints[static_cast<std::size_t>(cls.front())], ints[k]).isomorphic) {
                    cls.push_back(static_cast<int>(k));
                    placed = true;
                    break;
                }
            if (!placed) bucket.push_back({static_cast<int>(k)});
        }
        pairs.clear();
        for (const auto& [fp, bucket] : groups)
            for (const auto& cls : bucket)
                for (std::size_t x = 0; x < cls.size() && static_cast<int>(pairs.size()) < opts.samples; ++x)
                    for (std::size_t y = x + 1; y < cls.size() && static_cast<int>(pairs.size()) < opts.samples; ++y)
                        pairs.emplace_back(pool[static_cast<std::size_t>(keep[static_cast<std::size_t>(cls[x])])],
                                           pool[static_cast<std::size_t>(keep[static_cast<std::size_t>(cls[y])])]);
    }

    res.failures = parallel_collect(static_cast<int>(pairs.size()), opts.jobs, [&](int i) {
        std::vector<SuiteFailure> fails;
        const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
        ExtNat ra = radius(a), rb = radius(b);
        auto va = ra.value(), vb = rb.value(); // connected, so finite
        if ((va > vb ? va - vb : vb - va) > 1)
            fails.push_back({"radius gap exceeds 1 for isomorphic internal graphs (pair " +
                                 std::to_string(i) + ")",
                             to_edge_list_text(a) + "--\n" + to_edge_list_text(b)});
        Verdict v = distinguish(a, b);
        if (v.kind == VerdictKind::NotIsomorphic)
            fails.push_back({"distinguisher separated graphs with isomorphic internal graphs "
                             "(pair " +
                                 std::to_string(i) + ", basis " + to_string(v.basis) + ")",
                             to_edge_list_text(a) + "--\n" + to_edge_list_text(b)});
        return fails;
    });
    res.checked = static_cast<int>(pairs.size());
    if (res.checked < opts.samples)
        res.failures.push_back({"sampler could not build enough matched pairs", ""});
    return res;
}

SuiteResult run_oracle(const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "oracle";
    auto catalog = nonisomorphic_graphs_up_to(opts.max_n);
    res.failures = parallel_collect(static_cast<int>(catalog.size()), opts.jobs, [&](int i) {
        std::vector<SuiteFailure> fails;
        const Graph& g = catalog[static_cast<std::size_t>(i)];
        auto fast = internal_sets_fast(g);
        auto brute = internal_sets_bruteforce(g);
        if (fast.all_singletons != brute.all_singletons)
            fails.push_back({"internal-set fast path disagrees with brute force (catalog entry " +
                                 std::to_string(i) + ")",
                             to_edge_list_text(g)});
        if (fast.internal_vertices != brute.internal_vertices)
            fails.push_back({"internal vertex lists disagree (catalog entry " +
                                 std::to_string(i) + ")",
                             to_edge_list_text(g)});
        if (link_condition(g).holds != link_condition_bruteforce(g).holds)
            fails.push_back({"link-condition fast path disagrees with brute force (catalog "
                             "entry " +
                                 std::to_string(i) + ")",
                             to_edge_list_text(g)});
        return fails;
    });
    res.checked = static_cast<int>(catalog.size());
    return res;
}

SuiteResult run_prop45(const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "prop45";
    int checked = 0;
    auto expect_rigid = [&](const Graph& g, const std::string& what) {
        ++checked;
        if (!is_h_rigid(g).h_rigid)
            res.failures.push_back({what + " reported not rigid", to_edge_list_text(g)});
    };
    for (int n = 2; n <= 10; ++n) expect_rigid(line(n), "line(" + std::to_string(n) + ")");
    expect_rigid(cycle(3), "cycle(3)");
    for (int n = 5; n <= 10; ++n) expect_rigid(cycle(n), "cycle(" + std::to_string(n) + ")");

    // The 4-cycle is the documented exception: it must fail with witness {2,4}.
    {
        ++checked;
        auto rep = is_h_rigid(cycle(4));
        std::vector<VertexId> expected{"2", "4"};
        if (rep.h_rigid || !rep.internal_set_witness || *rep.internal_set_witness != expected ||
            rep.note.empty()) {
            res.whitelist_ok = false;
            res.failures.push_back(
                {"cycle(4) did not fail in the documented way (expected witness {2,4} and a "
                 "discrepancy note)",
                 to_edge_list_text(cycle(4))});
        } else {
            res.notes.push_back("cycle(4): " + rep.note);
        }
    }

    int trees = opts.samples;
    auto tree_failures = parallel_collect(trees, opts.jobs, [&](int i) {
        std::vector<SuiteFailure> fails;
        int n = 2 + (i % 13); // 2..14
        Graph t = random_tree(n, opts.seed + static_cast<std::uint64_t>(i));
        if (!is_h_rigid(t).h_rigid)
            fails.push_back({"random tree reported not rigid (sample " + std::to_string(i) + ")",
                             to_edge_list_text(t)});
        return fails;
    });
    checked += trees;
    res.failures.insert(res.failures.end(), tree_failures.begin(), tree_failures.end());
    res.checked = checked;
    return res;
}

} // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "prop42") return run_prop42(opts);
    if (name == "lemma43") return run_lemma43(opts);
    if (name == "cor411") return run_cor411(opts);
    if (name == "oracle") return run_oracle(opts);
    if (name == "prop45") return run_prop45(opts);
    throw BadParamError("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"prop42", "lemma43", "cor411", "oracle", "prop45"};
}

nlohmann::json suite_result_to_json(const SuiteResult& r, const SuiteOptions& opts) {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["samples"] = opts.samples;
    j["seed"] = opts.seed;
    j["max_n"] = opts.max_n;
    j["checked"] = r.checked;
    auto fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"description", f.description}, {"graph", f.graph}});
    j["failures"] = fails;
    j["notes"] = r.notes;
    j["whitelist_ok"] = r.whitelist_ok;
    j["pass"] = r.pass();
    return j;
}

} // namespace gfr
