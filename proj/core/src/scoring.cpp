#include "longpath/scoring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace longpath {

WalkWeightTables path_weight_sums(const Digraph& g, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const int n = g.vertex_count();

    WalkWeightTables t;
    t.depth = depth;
    t.walk_out.assign(depth, std::vector<double>(n, 0.0));
    t.walk_in.assign(depth, std::vector<double>(n, 0.0));

    // weight[i][v] = sum over length-(i+1) walks of their total weight,
    // count[v] = number of walks of the previous length. An edge v->u
    // extends every length-i walk at u, so it contributes
    // w(v->u) * count(u) plus the walks' own weight.
    std::vector<double> count_prev(n, 1.0), count_cur(n);
    for (int i = 0; i < depth; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            double total = 0.0, walks = 0.0;
            for (const Arc& a : g.out(v)) {
                total += a.weight * count_prev[a.to];
                if (i > 0) total += t.walk_out[i - 1][a.to];
                walks += count_prev[a.to];
            }
            t.walk_out[i][v] = total;
            count_cur[v] = walks;
        }
        std::swap(count_prev, count_cur);
    }

    count_prev.assign(n, 1.0);
    for (int i = 0; i < depth; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            double total = 0.0, walks = 0.0;
            for (const Arc& a : g.in(v)) {
                total += a.weight * count_prev[a.to];
                if (i > 0) total += t.walk_in[i - 1][a.to];
                walks += count_prev[a.to];
            }
            t.walk_in[i][v] = total;
            count_cur[v] = walks;
        }
        std::swap(count_prev, count_cur);
    }
    return t;
}

ScoreTable vertex_scores(WalkWeightTables tables, std::span<const double> coeffs) {
    if (static_cast<int>(coeffs.size()) != tables.depth)
        throw std::invalid_argument("need one coefficient per walk length");
    for (double c : coeffs)
        if (!(c > 0.0)) throw std::invalid_argument("coefficients must be > 0");

    const int n = tables.walk_out.empty() ? 0 : static_cast<int>(tables.walk_out[0].size());
    ScoreTable s;
    s.depth = tables.depth;
    s.coeffs.assign(coeffs.begin(), coeffs.end());
    s.score_out.assign(n, 0.0);
    s.score_in.assign(n, 0.0);
    for (int i = 0; i < tables.depth; ++i)
        for (Vertex v = 0; v < n; ++v) {
            s.score_out[v] += coeffs[i] * tables.walk_out[i][v];
            s.score_in[v] += coeffs[i] * tables.walk_in[i][v];
        }
    s.walks = std::move(tables);
    return s;
}

namespace {

// Priority groups, lowest explored first. Dead ends override the
// low-indegree exception.
enum : int { kTakeNow = 0, kRegular = 1, kDeadEnd = 2 };

} // namespace

Digraph order_neighbors(const Digraph& g, const ScoreTable& scores,
                        const SccInfo& info, int low_indegree_threshold) {
    assert(info.ranks_computed());
    const int n = g.vertex_count();

    std::vector<int> out_group(n), in_group(n);
    for (Vertex v = 0; v < n; ++v) {
        out_group[v] = g.out_degree(v) == 0 ? kDeadEnd
                     : g.in_degree(v) <= low_indegree_threshold ? kTakeNow
                                                                : kRegular;
        in_group[v] = g.in_degree(v) == 0 ? kDeadEnd
                    : g.out_degree(v) <= low_indegree_threshold ? kTakeNow
                                                                : kRegular;
    }

    std::vector<std::vector<Arc>> out(n), in(n);
    for (Vertex v = 0; v < n; ++v) {
        out[v].assign(g.out(v).begin(), g.out(v).end());
        std::sort(out[v].begin(), out[v].end(), [&](const Arc& a, const Arc& b) {
            if (out_group[a.to] != out_group[b.to]) return out_group[a.to] < out_group[b.to];
            int ra = info.out_rank(a.to), rb = info.out_rank(b.to);
            if (ra != rb) return ra > rb;
            if (scores.score_out[a.to] != scores.score_out[b.to])
                return scores.score_out[a.to] < scores.score_out[b.to];
            return a.to < b.to;
        });
        in[v].assign(g.in(v).begin(), g.in(v).end());
        std::sort(in[v].begin(), in[v].end(), [&](const Arc& a, const Arc& b) {
            if (in_group[a.to] != in_group[b.to]) return in_group[a.to] < in_group[b.to];
            int ra = info.in_rank(a.to), rb = info.in_rank(b.to);
            if (ra != rb) return ra > rb;
            if (scores.score_in[a.to] != scores.score_in[b.to])
                return scores.score_in[a.to] < scores.score_in[b.to];
            return a.to < b.to;
        });
    }

    Digraph sorted = g;
    sorted.reorder_adjacency(std::move(out), std::move(in));
    return sorted;
}

} // namespace longpath
