#pragma once

#include <vector>

#include "longpath/components.hpp"
#include "longpath/digraph.hpp"

namespace longpath {

// Per-vertex walk-weight tables. walk_out[i][v] (0-based i, walk length
// i + 1) is the total weight of all directed walks of that length starting
// at v, each walk contributing the sum of its edge weights; walk_in is the
// mirror for walks ending at v. walk_out[0] is the weighted out-degree.
struct WalkWeightTables {
    int depth = 0;
    std::vector<std::vector<double>> walk_out;
    std::vector<std::vector<double>> walk_in;
};

WalkWeightTables path_weight_sums(const Digraph& g, int depth);

// score_out(v) = sum_i coeffs[i] * walk_out[i][v], and symmetrically for
// score_in. A high out score means many heavy walks leave v.
struct ScoreTable {
    int depth = 0;
    std::vector<double> coeffs;
    WalkWeightTables walks;
    std::vector<double> score_out;
    std::vector<double> score_in;
};

ScoreTable vertex_scores(WalkWeightTables tables, std::span<const double> coeffs);

// Sorts every adjacency list into DFS exploration priority and returns the
// reordered graph. Out-lists: dead ends (out-degree 0) last; vertices whose
// in-degree is at most low_indegree_threshold first (they are unreachable
// later unless taken when first seen); the rest by descending out-rank,
// then ascending out score, then vertex id. In-lists mirrored.
Digraph order_neighbors(const Digraph& g, const ScoreTable& scores,
                        const SccInfo& info, int low_indegree_threshold);

} // namespace longpath
