#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gfr/graph.hpp"

namespace gfr {

// Named graph families. Parameter ranges follow the standard definitions;
// out-of-range parameters raise BadParamError.

Graph line(int n);   // path on 1..n, n >= 2
Graph cycle(int n);  // cycle on 1..n, n >= 3

Graph complete(int n);                    // n >= 1
Graph complete_bipartite(int m, int n);   // m, n >= 1
Graph star(int k);                        // center plus k leaves, k >= 1

// Uniform labeled tree on 1..n, decoded from a seeded Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Finite truncation of the regular tree in which the root has d-1 neighbors
// and every other interior vertex has d. Cut after `depth` levels.
Graph truncated_regular_tree(int d, int depth);

// Parses a "family:tag:params" source such as family:line:5,
// family:kbipartite:3:3, family:randtree:12:7. Throws BadParamError.
Graph family_graph(std::string_view spec);

// One-line description of the supported family tags for CLI help text.
std::string family_usage();

} // namespace gfr
