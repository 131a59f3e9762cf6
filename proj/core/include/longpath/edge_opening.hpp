#pragma once

#include "longpath/components.hpp"
#include "longpath/dfs_search.hpp"
#include "longpath/path.hpp"
#include "longpath/pto.hpp"

namespace longpath {

// Result of opening one path edge inside a pseudo-topological order: the
// in-between block B (positions block_begin..block_end) holds every
// non-path vertex whose component lies in the skeleton id interval of the
// opened edge's endpoints.
struct OpenedOrder {
    int edge_index = 0;
    int block_begin = 0;
    int block_end = 0;

    int block_size() const { return block_end - block_begin; }
};

// Rearranges `order` so the endpoints of p's edge_index-th edge are as far
// apart as possible: all eligible non-path vertices are packed between
// them, grouped by component id with a random shuffle inside each
// component. Everything else keeps its relative order (blocks caught
// between the endpoints but outside the id interval are shifted out by
// component id). The order stays a strong PTO with p in path order.
OpenedOrder open_edge(const Digraph& g, const SccInfo& info,
                      PseudoTopoOrder& order, const Path& p, int edge_index,
                      Rng& rng);

// Reverses the block inside each component run. A full reversal of a
// multi-component block would break the strong-PTO property, so the
// reversal is per component; for the common single-component block it is
// the exact reverse permutation.
void reverse_block(const SccInfo& info, PseudoTopoOrder& order,
                   const OpenedOrder& opened);

// `steps` random swap attempts on the block: pick a random block vertex u
// and exchange it with a random out-neighbor inside the block that sits
// before u (a backward edge). Attempts without a candidate are consumed.
// Never touches path vertices; drives the block toward a topological order
// of its induced subgraph.
void heuristic_refine(const Digraph& g, PseudoTopoOrder& order,
                      const OpenedOrder& opened, int steps, Rng& rng);

enum class ImproveStrategy { basic, reverse, heuristic, all };

struct ImproveOptions {
    double budget_ms = 1000.0;
    ImproveStrategy strategy = ImproveStrategy::all;
    double refine_steps_factor = 4.0;  // swap attempts per block vertex
};

// Local search around p: impose it on a fresh random PTO, evaluate, then
// open its edges in random order, trying per edge the random block, the
// reversed block, and the refined block (per strategy). Any strict gain
// replaces p and restarts with a fresh PTO. Stops when a full sweep brings
// no gain or the budget runs out. The returned weight never decreases.
Path improve_path(const Digraph& g, const SccInfo& info, Path p,
                  const ImproveOptions& opts, Rng& rng,
                  SearchStats* stats = nullptr);

} // namespace longpath
