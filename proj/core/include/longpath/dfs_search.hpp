#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "longpath/components.hpp"
#include "longpath/path.hpp"
#include "longpath/scoring.hpp"

namespace longpath {

// First arc out of the tail, strictly after `after` in adjacency order
// (from the start when absent), whose head is not on the path. Returns the
// arc index, or nullopt when the tail's arcs are exhausted.
std::optional<int> next_unexplored_edge(const Path& p,
                                        std::optional<int> after = std::nullopt);

enum class SearchStep { advanced, exhausted };

// One step of in-place DFS path enumeration: pops while no unexplored
// sibling arc exists (and more than the root remains), then either appends
// the next head or reports the root's arcs exhausted. Repeated calls visit
// every simple path from the root exactly once.
SearchStep next_path(Path& p);

struct SearchBudget {
    double wall_ms = 1000.0;
    std::uint64_t stagnation_iters = 500'000;  // iterations without improvement
};

struct SearchStats {
    std::uint64_t iterations = 0;    // next_path steps / edge openings
    std::uint64_t improvements = 0;  // strict best-weight improvements
};

struct DfsOptions {
    SearchBudget budget;
    int back_erase = 3;              // edges dropped before the backward phase
    double forward_fraction = 0.7;   // share of the budget spent forward
};

// Budgeted heuristic DFS from `start`: forward enumeration snapshotting the
// best path seen, then the best path, minus its first back_erase edges, is
// extended backward over the in-adjacency. Adjacency lists are expected to
// be presorted by order_neighbors.
Path dfs_search(const Digraph& g, Vertex start, const DfsOptions& opts,
                SearchStats* stats = nullptr);

// Same search continued from an existing path instead of a single vertex:
// forward enumeration from the seed, then the backward pass. Returns the
// best path seen (at least the seed).
Path dfs_extend(const Digraph& g, const Path& seed, const DfsOptions& opts,
                SearchStats* stats = nullptr);

// `count` vertices of maximal out-rank, ties by descending out score, then
// ascending id.
std::vector<Vertex> choose_starts(const SccInfo& info, const ScoreTable& scores,
                                  int count);

} // namespace longpath
