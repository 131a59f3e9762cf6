#pragma once

#include <vector>

#include "longpath/digraph.hpp"

namespace longpath {

struct OracleResult {
    std::vector<Vertex> verts;
    double weight = 0.0;
};

// Exhaustive longest-simple-path search over all starts. Exponential;
// refuses graphs above max_vertices (std::invalid_argument). Ties resolve
// to the lexicographically smallest vertex sequence.
OracleResult brute_force_lsp(const Digraph& g, int max_vertices = 12);

} // namespace longpath
