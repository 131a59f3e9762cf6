#pragma once

#include <span>
#include <vector>

#include "longpath/digraph.hpp"

namespace longpath {

enum class Direction { forward, backward };

// A simple path under construction, mutated in place by the search. The
// vertex sequence follows the exploration direction: a backward path lists
// vertices tail-first and walks the in-adjacency, so the forward path it
// denotes is the reverse of verts().
//
// Per position, the index of the adjacency arc taken out of that vertex is
// kept so the search can resume a sibling scan in O(1) after a pop.
class Path {
public:
    Path(const Digraph& g, Vertex start, Direction dir = Direction::forward);

    // Builds a forward path from an explicit vertex sequence; throws
    // std::invalid_argument unless the sequence is a simple path of g.
    static Path from_vertices(const Digraph& g, std::span<const Vertex> seq);

    const Digraph& graph() const { return *graph_; }
    Direction direction() const { return dir_; }

    int size() const { return static_cast<int>(verts_.size()); }
    Vertex tail() const { return verts_.back(); }
    bool contains(Vertex v) const { return in_path_[v] != 0; }
    double weight() const { return weight_; }
    const std::vector<Vertex>& verts() const { return verts_; }

    // Adjacency of the tail in the exploration direction.
    std::span<const Arc> tail_arcs() const;
    // Arc index taken out of position pos (valid for pos < size() - 1).
    int arc_index_at(int pos) const { return arc_taken_[pos]; }

    // Appends the head of tail_arcs()[arc_index]; the head must not be in
    // the path.
    void push(int arc_index);
    // Removes the tail (size() must be > 1) and returns the arc index the
    // new tail had taken, i.e. where a sibling scan should resume.
    int pop();
    // Drops the first `edges` edges (from the start of verts()).
    void erase_front(int edges);

    // Vertex sequence in forward edge order regardless of direction.
    std::vector<Vertex> forward_verts() const;

    // Full invariant check: distinct vertices, consecutive arcs exist, the
    // cached weight matches a recomputation within 1e-9 relative error.
    bool check_invariants() const;

private:
    const Digraph* graph_;
    Direction dir_;
    std::vector<Vertex> verts_;
    std::vector<int> arc_taken_;
    std::vector<char> in_path_;
    double weight_ = 0.0;
};

// Sum of edge weights along a forward vertex sequence; throws
// std::invalid_argument unless it is a simple path of g.
double path_weight(const Digraph& g, std::span<const Vertex> seq);
bool is_simple_path(const Digraph& g, std::span<const Vertex> seq);

} // namespace longpath
