#pragma once

#include <vector>

#include "gfr/graph.hpp"

namespace gfr {

// All graphs on exactly n vertices up to isomorphism, labels "1".."n".
// Built by vertex extension with isomorphism dedup; counts match the known
// sequence 1, 1, 2, 4, 11, 34, 156, 1044 for n = 0..7. Practical for n <= 8.
std::vector<Graph> nonisomorphic_graphs(int n);

// Concatenation for 0..n, same order as repeated nonisomorphic_graphs calls.
std::vector<Graph> nonisomorphic_graphs_up_to(int n);

// All cographs with 1..n vertices up to isomorphism, generated as the
// closure of the single vertex under disjoint union and join.
std::vector<Graph> cographs_up_to(int n);

} // namespace gfr
