#pragma once

#include <string>
#include <vector>

#include "longpath/config.hpp"
#include "longpath/dfs_search.hpp"
#include "longpath/edge_opening.hpp"

namespace longpath {

// Graph ready for searching: components, ranks and scores computed and the
// adjacency lists sorted into exploration priority.
struct PreprocessedGraph {
    Digraph graph;
    SccInfo info;
    ScoreTable scores;
};

PreprocessedGraph preprocess(const Digraph& g, const SolverConfig& cfg);

struct SolveReport {
    std::vector<Vertex> path;
    double weight = 0.0;
    double preprocess_ms = 0.0;
    double dfs_ms = 0.0;
    double improve_ms = 0.0;
    double total_ms = 0.0;
    std::uint64_t iterations = 0;
    std::uint64_t improvements = 0;
    std::uint64_t seed = 0;
};

// Full pipeline: preprocess, budgeted heuristic DFS from the chosen starts
// of every weak component, then edge-opening improvement of each
// component's best candidate; the heaviest path wins. With workers > 1 the
// starts are split across threads over the shared immutable graph and the
// results merged by weight (ties to the lexicographically smaller path).
// A run is deterministic for fixed (input, config, seed, workers).
SolveReport solve(const Digraph& g, const SolverConfig& cfg);

// Same pipeline on an already preprocessed graph.
SolveReport solve(const PreprocessedGraph& pre, const SolverConfig& cfg);

std::string report_to_json(const SolveReport& report);
std::string report_to_text(const SolveReport& report);

} // namespace longpath
