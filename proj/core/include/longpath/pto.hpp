#pragma once

#include <random>
#include <span>
#include <vector>

#include "longpath/components.hpp"
#include "longpath/path.hpp"

namespace longpath {

using Rng = std::mt19937_64;

// A strong pseudo-topological order: a vertex permutation in which every
// backward edge spans only vertices of one strongly connected component.
// Erasing the backward edges leaves the subjacent DAG, whose longest path
// is computed by DP over positions.
//
// The permutation and its inverse are kept in lockstep. Per-vertex DP
// values are cached; first_dirty is the smallest position whose value may
// be stale, so a partial reorder only pays for recomputing the suffix.
class PseudoTopoOrder {
public:
    PseudoTopoOrder() = default;
    // Takes an explicit permutation; DP values start fully stale.
    explicit PseudoTopoOrder(std::vector<Vertex> order);

    int size() const { return static_cast<int>(order_.size()); }
    Vertex at(int pos) const { return order_[pos]; }
    int position_of(Vertex v) const { return inv_[v]; }
    std::span<const Vertex> order() const { return order_; }
    int first_dirty() const { return first_dirty_; }

    // DP value: weight of the best subjacent-DAG path ending at v. Valid
    // for vertices at positions below first_dirty().
    double value(Vertex v) const { return value_[v]; }

    // Recomputes DP values for positions >= pos; positions below must
    // already be valid.
    void recompute_from(const Digraph& g, int pos);

    // Refreshes stale DP values and returns the best one: the weight of
    // the longest subjacent-DAG path, without materializing it.
    double best_value(const Digraph& g);

    // Longest path of the subjacent DAG: refreshes stale DP values, then
    // backtracks from the best vertex (ties to the smallest id). Leaves
    // first_dirty() == size().
    Path longest_path(const Digraph& g);

    // Rewrites the positions held by p's vertices so they appear in path
    // order; every other vertex keeps its position. The result is again a
    // strong pseudo-topological order. Throws std::invalid_argument if p
    // is not a path of g.
    void impose(const Digraph& g, const Path& p);

    // Swaps the vertices at two positions, marking the earlier one dirty.
    void swap_positions(int a, int b);

    // Direct suffix rewrite used by the edge-opening rearrangement: copies
    // new_suffix over positions [from, from + new_suffix.size()).
    void assign_range(int from, std::span<const Vertex> new_suffix);

    bool check_inverse() const;

private:
    void mark_dirty(int pos) { first_dirty_ = std::min(first_dirty_, pos); }

    std::vector<Vertex> order_;
    std::vector<int> inv_;
    std::vector<double> value_;
    int first_dirty_ = 0;
};

// Random strong PTO: a random topological order of the skeleton with each
// component's block independently shuffled.
PseudoTopoOrder random_pto(const Digraph& g, const SccInfo& info, Rng& rng);

// Checker for the defining property: for every edge y -> x with x placed
// before y, all vertices between them share y's component. Quadratic in
// the worst case; meant for tests and diagnostics.
bool is_strong_pto(const Digraph& g, const SccInfo& info,
                   std::span<const Vertex> order);

} // namespace longpath
