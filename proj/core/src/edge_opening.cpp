#include "longpath/edge_opening.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace longpath {

OpenedOrder open_edge(const Digraph& g, const SccInfo& info,
                      PseudoTopoOrder& order, const Path& p, int edge_index,
                      Rng& rng) {
    if (edge_index < 0 || edge_index >= p.size() - 1)
        throw std::invalid_argument("edge index out of range");

    const auto path_verts = p.forward_verts();
    const Vertex tailv = path_verts[edge_index];
    const Vertex headv = path_verts[edge_index + 1];
    const int comp_lo = info.scc_id[tailv];
    const int comp_hi = info.scc_id[headv];
    assert(comp_lo <= comp_hi);
    const int pos_tail = order.position_of(tailv);
    const int pos_head = order.position_of(headv);
    const int n = order.size();

    std::vector<char> on_path(n, 0);
    for (Vertex v : path_verts) on_path[v] = 1;
    auto in_block = [&](Vertex v) {
        return !on_path[v] && info.scc_id[v] >= comp_lo && info.scc_id[v] <= comp_hi;
    };

    // Non-path vertices of the id interval become the block; vertices
    // trapped between the endpoints but outside the interval are pushed to
    // whichever side their component id dictates. All segments keep the
    // old relative order, which keeps the whole order a strong PTO.
    std::vector<Vertex> rebuilt, block, spill_low, spill_high, after;
    rebuilt.reserve(n);
    for (int pos = 0; pos < n; ++pos) {
        Vertex v = order.at(pos);
        if (in_block(v)) {
            block.push_back(v);
            continue;
        }
        if (pos < pos_tail) {
            rebuilt.push_back(v);
        } else if (pos <= pos_head) {
            if (v == tailv || v == headv) continue;  // re-inserted around the block
            (info.scc_id[v] < comp_lo ? spill_low : spill_high).push_back(v);
        } else {
            after.push_back(v);
        }
    }

    std::shuffle(block.begin(), block.end(), rng);
    std::stable_sort(block.begin(), block.end(), [&](Vertex a, Vertex b) {
        return info.scc_id[a] < info.scc_id[b];
    });

    rebuilt.insert(rebuilt.end(), spill_low.begin(), spill_low.end());
    rebuilt.push_back(tailv);
    const int block_begin = static_cast<int>(rebuilt.size());
    rebuilt.insert(rebuilt.end(), block.begin(), block.end());
    const int block_end = static_cast<int>(rebuilt.size());
    rebuilt.push_back(headv);
    rebuilt.insert(rebuilt.end(), spill_high.begin(), spill_high.end());
    rebuilt.insert(rebuilt.end(), after.begin(), after.end());
    assert(static_cast<int>(rebuilt.size()) == n);

    order.assign_range(0, rebuilt);
    return OpenedOrder{edge_index, block_begin, block_end};
}

void reverse_block(const SccInfo& info, PseudoTopoOrder& order,
                   const OpenedOrder& opened) {
    int run_start = opened.block_begin;
    while (run_start < opened.block_end) {
        int comp = info.scc_id[order.at(run_start)];
        int run_end = run_start + 1;
        while (run_end < opened.block_end &&
               info.scc_id[order.at(run_end)] == comp)
            ++run_end;
        for (int i = run_start, j = run_end - 1; i < j; ++i, --j)
            order.swap_positions(i, j);
        run_start = run_end;
    }
}

void heuristic_refine(const Digraph& g, PseudoTopoOrder& order,
                      const OpenedOrder& opened, int steps, Rng& rng) {
    const int len = opened.block_size();
    if (len < 2) return;
    std::uniform_int_distribution<int> pick_pos(opened.block_begin,
                                                opened.block_end - 1);
    std::vector<Vertex> candidates;
    for (int step = 0; step < steps; ++step) {
        Vertex u = order.at(pick_pos(rng));
        int pos_u = order.position_of(u);
        candidates.clear();
        for (const Arc& a : g.out(u)) {
            int pos_v = order.position_of(a.to);
            if (pos_v >= opened.block_begin && pos_v < pos_u)
                candidates.push_back(a.to);
        }
        if (candidates.empty()) continue;  // consumed attempt, pick another u
        Vertex v = candidates.size() == 1
            ? candidates[0]
            : candidates[std::uniform_int_distribution<std::size_t>(
                  0, candidates.size() - 1)(rng)];
        order.swap_positions(pos_u, order.position_of(v));
    }
}

namespace {

using Clock = std::chrono::steady_clock;

} // namespace

Path improve_path(const Digraph& g, const SccInfo& info, Path p,
                  const ImproveOptions& opts, Rng& rng, SearchStats* stats) {
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double, std::milli>(opts.budget_ms));
    if (opts.budget_ms <= 0.0) return p;

    const bool try_reverse = opts.strategy == ImproveStrategy::reverse ||
                             opts.strategy == ImproveStrategy::all;
    const bool try_refine = opts.strategy == ImproveStrategy::heuristic ||
                            opts.strategy == ImproveStrategy::all;

    std::vector<int> edge_order;
    while (true) {
        if (Clock::now() >= deadline) break;

        PseudoTopoOrder order = random_pto(g, info, rng);
        order.impose(g, p);
        auto gains = [&] { return order.best_value(g) > p.weight(); };

        // Imposition alone can already beat p: all of p's edges survive in
        // the subjacent DAG, so the DP result is at least weight(p).
        if (gains()) {
            p = order.longest_path(g);
            if (stats) ++stats->improvements;
            continue;
        }

        edge_order.resize(static_cast<std::size_t>(std::max(p.size() - 1, 0)));
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::shuffle(edge_order.begin(), edge_order.end(), rng);

        bool improved = false;
        bool out_of_time = false;
        for (int edge_index : edge_order) {
            if (Clock::now() >= deadline) {
                out_of_time = true;
                break;
            }
            OpenedOrder opened = open_edge(g, info, order, p, edge_index, rng);
            if (stats) ++stats->iterations;
            if (gains()) {
                improved = true;
            } else if (try_reverse) {
                reverse_block(info, order, opened);
                improved = gains();
            }
            if (!improved && try_refine) {
                int steps = static_cast<int>(opts.refine_steps_factor *
                                             opened.block_size());
                heuristic_refine(g, order, opened, steps, rng);
                improved = gains();
            }
            if (improved) {
                p = order.longest_path(g);
                if (stats) ++stats->improvements;
                break;
            }
        }
        if (out_of_time || !improved) break;
    }
    return p;
}

} // namespace longpath
