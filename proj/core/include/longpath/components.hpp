#pragma once

#include <span>
#include <vector>

#include "longpath/digraph.hpp"

namespace longpath {

// Connectivity structure of a digraph: strongly connected components with a
// topologically numbered condensation (skeleton), weak components, and the
// longest-skeleton-path ranks used to steer the search.
//
// Component ids are assigned so that scc_id(u) < scc_id(v) whenever the
// skeleton has the edge comp(u) -> comp(v); integer comparison of scc ids
// therefore respects the skeleton partial order.
struct SccInfo {
    int scc_count = 0;
    int wcc_count = 0;
    std::vector<int> scc_id;  // per vertex
    std::vector<int> wcc_id;  // per vertex; empty until filled

    // Skeleton out-adjacency per component, deduplicated, targets ascending.
    std::vector<std::vector<int>> skeleton;

    // Component members, grouped: vertices of component c are
    // member_list[member_begin[c] .. member_begin[c + 1]).
    std::vector<int> member_begin;
    std::vector<Vertex> member_list;

    // Longest skeleton path lengths (in edges) per component; empty until
    // compute_ranks has run.
    std::vector<int> comp_out_rank;
    std::vector<int> comp_in_rank;

    int out_rank(Vertex v) const { return comp_out_rank[scc_id[v]]; }
    int in_rank(Vertex v) const { return comp_in_rank[scc_id[v]]; }
    bool ranks_computed() const { return !comp_out_rank.empty(); }

    std::span<const Vertex> members(int comp) const {
        return std::span<const Vertex>(member_list)
            .subspan(member_begin[comp], member_begin[comp + 1] - member_begin[comp]);
    }
};

// Vertices share an id iff they are connected when edge direction is ignored.
// Ids are dense, numbered by smallest contained vertex.
std::vector<int> weakly_connected_components(const Digraph& g);

// Tarjan over an explicit stack; fills scc ids, the skeleton and the
// component member table. Ranks and wcc ids are left unfilled.
SccInfo strongly_connected_components(const Digraph& g);

// Fills comp_out_rank / comp_in_rank by DP over the topological numbering.
void compute_ranks(SccInfo& info);

// Convenience: sccs + skeleton + ranks + weak components in one pass.
SccInfo analyze_components(const Digraph& g);

} // namespace longpath
