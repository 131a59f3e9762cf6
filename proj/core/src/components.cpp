#include "longpath/components.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace longpath {

std::vector<int> weakly_connected_components(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (Vertex u = 0; u < n; ++u)
        for (const Arc& a : g.out(u)) {
            int ru = find(u), rv = find(a.to);
            if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
        }

    // Number components by smallest member.
    std::vector<int> id(n, -1);
    int count = 0;
    for (Vertex v = 0; v < n; ++v)
        if (find(v) == v) id[v] = count++;
    std::vector<int> result(n);
    for (Vertex v = 0; v < n; ++v) result[v] = id[find(v)];
    return result;
}

SccInfo strongly_connected_components(const Digraph& g) {
    const int n = g.vertex_count();
    SccInfo info;
    info.scc_id.assign(n, -1);

    // Iterative Tarjan. Completion order yields components in reverse
    // topological order, so ids are flipped at the end.
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    stack.reserve(n);
    int next_index = 0;
    int comp_count = 0;

    struct Frame {
        Vertex v;
        std::size_t next_arc;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            Vertex v = f.v;
            if (f.next_arc == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            auto arcs = g.out(v);
            while (f.next_arc < arcs.size()) {
                Vertex w = arcs[f.next_arc++].to;
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    Vertex w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    info.scc_id[w] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            call.pop_back();
            if (!call.empty()) {
                Vertex parent = call.back().v;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }

    info.scc_count = comp_count;
    for (Vertex v = 0; v < n; ++v)
        info.scc_id[v] = comp_count - 1 - info.scc_id[v];

    // Member table (counting sort by component id).
    info.member_begin.assign(comp_count + 1, 0);
    for (Vertex v = 0; v < n; ++v) ++info.member_begin[info.scc_id[v] + 1];
    std::partial_sum(info.member_begin.begin(), info.member_begin.end(),
                     info.member_begin.begin());
    info.member_list.resize(n);
    std::vector<int> cursor(info.member_begin.begin(), info.member_begin.end() - 1);
    for (Vertex v = 0; v < n; ++v) info.member_list[cursor[info.scc_id[v]]++] = v;

    // Skeleton: cross edges between components, deduplicated.
    info.skeleton.assign(comp_count, {});
    for (Vertex u = 0; u < n; ++u)
        for (const Arc& a : g.out(u)) {
            int cu = info.scc_id[u], cv = info.scc_id[a.to];
            if (cu != cv) info.skeleton[cu].push_back(cv);
        }
    for (auto& adj : info.skeleton) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return info;
}

void compute_ranks(SccInfo& info) {
    const int c = info.scc_count;
    info.comp_out_rank.assign(c, 0);
    info.comp_in_rank.assign(c, 0);
    // Skeleton edges go from lower to higher component id, so a plain id
    // sweep is a topological sweep.
    for (int u = c - 1; u >= 0; --u)
        for (int v : info.skeleton[u])
            info.comp_out_rank[u] =
                std::max(info.comp_out_rank[u], info.comp_out_rank[v] + 1);
    for (int u = 0; u < c; ++u)
        for (int v : info.skeleton[u])
            info.comp_in_rank[v] =
                std::max(info.comp_in_rank[v], info.comp_in_rank[u] + 1);
}

SccInfo analyze_components(const Digraph& g) {
    SccInfo info = strongly_connected_components(g);
    compute_ranks(info);
    info.wcc_id = weakly_connected_components(g);
    info.wcc_count = info.wcc_id.empty()
        ? 0
        : 1 + *std::max_element(info.wcc_id.begin(), info.wcc_id.end());
    return info;
}

} // namespace longpath
