#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace gfr {

struct SuiteOptions {
    int samples = 300;
    std::uint64_t seed = 1;
    int max_n = 7; // oracle suite: largest vertex count in the catalog
    int jobs = 1;
};

struct SuiteFailure {
    std::string description;
    std::string graph; // offending graph(s) as edge-list text
};

struct SuiteResult {
    std::string suite;
    int checked = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> notes;  // e.g. whitelisted discrepancies
    bool whitelist_ok = true;        // prop45: the 4-cycle behaved as documented

    bool pass() const { return failures.empty() && whitelist_ok; }
};

// Suites:
//   prop42  -- random connected graphs with singleton internal sets: every
//              external vertex neighbors an internal one
//   lemma43 -- same sampling: radius(g) <= radius(internal_graph(g)) + 1
//   cor411  -- pairs of connected rigid graphs with isomorphic internal
//              graphs: radius gap at most 1, and the distinguisher never
//              separates them
//   oracle  -- exhaustive catalog up to max_n: fast paths agree with the
//              subset brute force
//   prop45  -- family battery: lines, cycles, random trees rigid; the
//              4-cycle must fail with witness {2,4} (whitelisted)
// Throws BadParamError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

std::vector<std::string> suite_names();

nlohmann::json suite_result_to_json(const SuiteResult& r, const SuiteOptions& opts);

} // namespace gfr
