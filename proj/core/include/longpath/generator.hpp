#pragma once

#include <cstdint>

#include "longpath/digraph.hpp"
#include "longpath/pto.hpp"

namespace longpath {

struct PlantedInstance {
    Digraph graph;
    double optimal_weight = 0.0;  // n - 1 by construction
};

// Random digraph with a hidden Hamiltonian path: a random vertex
// permutation is connected by n - 1 unit edges, then m - (n - 1) further
// distinct random edges (no self-loops, no duplicates) are added, all with
// weight 1. The longest simple path weight is exactly n - 1. Throws
// std::invalid_argument unless n - 1 <= m <= n * (n - 1).
PlantedInstance generate_planted(int n, std::int64_t m, std::uint64_t seed);

// Erdos-Renyi style digraph: each ordered pair independently with
// probability `density`, weights uniform in (0, 1].
Digraph generate_random_digraph(int n, double density, Rng& rng);

} // namespace longpath
