#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfr/distinguish.hpp"
#include "gfr/factor.hpp"
#include "gfr/families.hpp"
#include "gfr/internal.hpp"
#include "gfr/io.hpp"
#include "gfr/verify.hpp"

namespace {

// Exit codes: 0 success, 1 property failure, 2 parse/input error,
// 3 oracle disagreement, 4 whitelist mismatch, 5 other operational error.
constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitWhitelistMismatch = 4;
constexpr int kExitOperational = 5;

std::string read_stream(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Graph sources: family:<tag>:<params>, file:<path>, '-' for stdin, or a bare
// file path.
gfr::Graph load_graph(const std::string& source) {
    if (source.rfind("family:", 0) == 0) return gfr::family_graph(source);
    if (source == "-") return gfr::parse_graph_auto(read_stream(std::cin));
    std::string path = source.rfind("file:", 0) == 0 ? source.substr(5) : source;
    std::ifstream in(path);
    if (!in) throw gfr::ParseError(0, 0, "cannot open file '" + path + "'");
    return gfr::parse_graph_auto(read_stream(in));
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int default_jobs() {
    if (const char* env = std::getenv("GFR_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& source, bool oracle, bool force, bool json_out) {
    gfr::Graph g = load_graph(source);
    auto report = gfr::is_h_rigid(g);
    auto expr = gfr::graph_to_expression(g);
    bool qss = gfr::is_quasi_strongly_solid(g);

    bool oracle_agrees = true;
    if (oracle) {
        auto brute_sets = gfr::internal_sets_bruteforce(g, std::nullopt, force);
        auto brute_link = gfr::link_condition_bruteforce(g, force);
        auto fast_sets = gfr::internal_sets_fast(g);
        oracle_agrees = brute_sets.all_singletons == fast_sets.all_singletons &&
                        brute_sets.internal_vertices == fast_sets.internal_vertices &&
                        brute_link.holds == gfr::link_condition(g).holds;
    }

    if (json_out) {
        nlohmann::json j;
        j["schema"] = 1;
        j["graph"] = gfr::graph_to_json(g);
        nlohmann::json links = nlohmann::json::object();
        for (const auto& v : g.vertices()) links[v] = gfr::link(g, {v});
        j["link_table"] = links;
        j["radius"] = gfr::ext_nat_to_json(gfr::radius(g));
        j["connected"] = gfr::is_connected(g);
        j["internal_vertices"] = report.int_vertices;
        j["internal_graph"] = gfr::graph_to_json(gfr::internal_graph(g));
        j["report"] = gfr::report_to_json(report);
        j["quasi_strongly_solid"] = qss;
        j["factor_expression"] = gfr::to_text(expr);
        if (oracle) j["oracle"] = {{"checked", true}, {"agrees", oracle_agrees}};
        print_json(j);
    } else {
        std::cout << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges\n";
        std::cout << "link table:\n";
        for (const auto& v : g.vertices()) {
            std::cout << "  " << v << ":";
            for (const auto& w : gfr::link(g, {v})) std::cout << " " << w;
            std::cout << "\n";
        }
        std::cout << "radius: " << gfr::radius(g).str() << "\n";
        std::cout << "connected: " << yes_no(gfr::is_connected(g)) << "\n";
        std::cout << "internal vertices:";
        for (const auto& v : report.int_vertices) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "internal graph edges:";
        for (const auto& [u, v] : gfr::internal_graph(g).edges()) std::cout << " " << u << "-" << v;
        std::cout << "\n";
        std::cout << "h-rigid: " << yes_no(report.h_rigid) << "\n";
        std::cout << "  locally finite: " << yes_no(report.locally_finite) << "\n";
        std::cout << "  internal sets are vertices: " << yes_no(report.internal_sets_are_vertices);
        if (report.internal_set_witness) {
            std::cout << " (witness:";
            for (const auto& v : *report.internal_set_witness) std::cout << " " << v;
            std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "  neighborhoods are unions of cliques: " << yes_no(report.link_condition_holds);
        if (report.link_witness)
            std::cout << " (witness: " << report.link_witness->path_a << "-"
                      << report.link_witness->path_mid << "-" << report.link_witness->path_b
                      << " in the neighborhood of " << report.link_witness->center << ")";
        std::cout << "\n";
        if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
        std::cout << "quasi-strongly solid: " << yes_no(qss) << "\n";
        std::cout << "factor expression: " << gfr::to_text(expr) << "\n";
        if (oracle)
            std::cout << "oracle agreement: " << (oracle_agrees ? "ok" : "MISMATCH") << "\n";
    }
    return oracle && !oracle_agrees ? kExitOracleMismatch : kExitOk;
}

int cmd_distinguish(const std::string& s1, const std::string& s2, bool json_out) {
    gfr::Graph g1 = load_graph(s1);
    gfr::Graph g2 = load_graph(s2);
    gfr::Verdict v = gfr::distinguish(g1, g2);
    if (json_out) {
        print_json(gfr::verdict_to_json(v));
    } else {
        std::cout << "verdict: " << gfr::to_string(v.kind) << "\n";
        std::cout << "basis: " << gfr::to_string(v.basis) << "\n";
        std::cout << "expr g1: " << gfr::to_text(v.expr1) << "\n";
        std::cout << "expr g2: " << gfr::to_text(v.expr2) << "\n";
        std::cout << "radius g1: " << v.radius1.str() << ", radius g2: " << v.radius2.str() << "\n";
        std::cout << "evidence: " << v.evidence.dump() << "\n";
    }
    return kExitOk;
}

int cmd_simplify(const std::string& source, bool strict, bool show_trace, bool json_out) {
    gfr::SimplifyOptions opts{strict};
    gfr::SimplifyResult result;
    if (source.rfind("expr:", 0) == 0) {
        result = gfr::simplify(gfr::parse_expression(source.substr(5)), opts);
    } else {
        result = gfr::graph_to_expression_traced(load_graph(source), opts);
    }
    if (json_out) {
        nlohmann::json j;
        j["schema"] = 1;
        j["normal_form"] = gfr::to_text(result.expr);
        j["expr"] = gfr::expr_to_json(result.expr);
        if (show_trace) j["trace"] = gfr::trace_to_json(result.trace);
        print_json(j);
    } else {
        std::cout << gfr::to_text(result.expr) << "\n";
        if (show_trace)
            for (const auto& step : result.trace)
                std::cout << "  " << step.rule << (step.extension ? " (extension)" : "") << ": "
                          << gfr::to_text(step.before) << "  ->  " << gfr::to_text(step.after)
                          << "\n";
    }
    return kExitOk;
}

int cmd_generate(const std::string& spec, const std::string& format) {
    gfr::Graph g = gfr::family_graph(spec);
    if (format == "edges") {
        std::cout << gfr::to_edge_list_text(g);
    } else if (format == "dot") {
        std::cout << gfr::to_dot(g);
    } else if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["graph"] = gfr::graph_to_json(g);
        print_json(j);
    } else {
        throw gfr::BadParamError("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const gfr::SuiteOptions& opts, bool json_out) {
    gfr::SuiteResult res = gfr::run_suite(suite, opts);
    if (json_out) {
        print_json(gfr::suite_result_to_json(res, opts));
    } else {
        std::cout << "suite " << res.suite << ": " << res.checked << " checks, "
                  << res.failures.size() << " failures -- " << (res.pass() ? "PASS" : "FAIL")
                  << "\n";
        for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
        for (const auto& f : res.failures) {
            std::cout << "failure: " << f.description << "\n";
            if (!f.graph.empty()) std::cout << f.graph;
        }
    }
    if (!res.whitelist_ok) return kExitWhitelistMismatch;
    return res.failures.empty() ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-product rigidity toolkit"};
    app.require_subcommand(1);

    std::string source1, source2, format = "edges", suite;
    bool oracle = false, force = false, json_out = false, strict = false, show_trace = false;
    gfr::SuiteOptions sopts;
    sopts.jobs = default_jobs();

    auto* analyze = app.add_subcommand(
        "analyze", "internal structure, rigidity and radius of one graph");
    analyze->add_option("source", source1, gfr::family_usage() + " | file:PATH | PATH | -")
        ->required();
    analyze->add_flag("--oracle", oracle, "cross-check fast paths against the subset brute force");
    analyze->add_flag("--force", force, "lift the brute-force size guard");
    analyze->add_flag("--json", json_out, "machine-readable output");

    auto* dist = app.add_subcommand("distinguish", "compare the factors of two graphs");
    dist->add_option("source1", source1, "first graph source")->required();
    dist->add_option("source2", source2, "second graph source")->required();
    dist->add_flag("--json", json_out, "machine-readable output");

    auto* simp = app.add_subcommand("simplify", "normal form of a factor expression");
    simp->add_option("source", source1, "graph source or expr:<expression>")->required();
    simp->add_flag("--strict", strict, "disable the LF-merge extension rule");
    simp->add_flag("--trace", show_trace, "print the rewrite steps");
    simp->add_flag("--json", json_out, "machine-readable output");

    auto* gen = app.add_subcommand("generate", "emit a family graph");
    gen->add_option("family", source1, gfr::family_usage())->required();
    gen->add_option("--format", format, "edges | dot | json");

    auto* verify = app.add_subcommand("verify", "run a property battery");
    verify->add_option("--suite", suite, "prop42 | lemma43 | cor411 | oracle | prop45")
        ->required();
    verify->add_option("--samples", sopts.samples, "sample count (default 300)");
    verify->add_option("--seed", sopts.seed, "base seed (default 1)");
    verify->add_option("--max-n", sopts.max_n, "oracle suite: catalog size cap (default 7)");
    verify->add_option("--jobs", sopts.jobs, "worker threads (default $GFR_JOBS or 1)");
    verify->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(source1, oracle, force, json_out);
        if (app.got_subcommand(dist)) return cmd_distinguish(source1, source2, json_out);
        if (app.got_subcommand(simp)) return cmd_simplify(source1, strict, show_trace, json_out);
        if (app.got_subcommand(gen)) return cmd_generate(source1, format);
        if (app.got_subcommand(verify)) return cmd_verify(suite, sopts, json_out);
    } catch (const gfr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gfr::BadParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gfr::UnknownVertexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gfr::SelfLoopError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gfr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitOk;
}
