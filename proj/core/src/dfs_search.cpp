#include "longpath/dfs_search.hpp"

#include <algorithm>
#include <chrono>

namespace longpath {

std::optional<int> next_unexplored_edge(const Path& p, std::optional<int> after) {
    auto arcs = p.tail_arcs();
    for (std::size_t i = after ? *after + 1 : 0; i < arcs.size(); ++i)
        if (!p.contains(arcs[i].to)) return static_cast<int>(i);
    return std::nullopt;
}

SearchStep next_path(Path& p) {
    std::optional<int> t = next_unexplored_edge(p);
    while (!t && p.size() > 1) {
        int taken = p.pop();
        t = next_unexplored_edge(p, taken);
    }
    if (!t) return SearchStep::exhausted;
    p.push(*t);
    return SearchStep::advanced;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BestTracker {
    std::vector<Vertex> verts;
    double weight = -1.0;

    bool offer(const Path& p) {
        if (p.weight() <= weight) return false;
        weight = p.weight();
        verts = p.forward_verts();
        return true;
    }
};

// Runs the enumeration until the deadline, the stagnation cap, or
// exhaustion. The clock is polled in batches; iteration cost dwarfs it
// otherwise.
void enumerate(Path& p, BestTracker& best, Clock::time_point deadline,
               std::uint64_t stagnation_cap, SearchStats* stats) {
    constexpr std::uint64_t kClockStride = 256;
    std::uint64_t since_improvement = 0;
    std::uint64_t iter = 0;
    while (true) {
        if (next_path(p) == SearchStep::exhausted) break;
        ++iter;
        if (best.offer(p)) {
            since_improvement = 0;
            if (stats) ++stats->improvements;
        } else if (++since_improvement >= stagnation_cap) {
            break;
        }
        if (iter % kClockStride == 0 && Clock::now() >= deadline) break;
    }
    if (stats) stats->iterations += iter;
}

// Rebuilds a forward vertex sequence as a Path walking the adjacency of
// `dir`; the sequence is traversed tail-first for the backward direction.
Path reseed(const Digraph& g, std::vector<Vertex> seq, Direction dir) {
    if (dir == Direction::backward) std::reverse(seq.begin(), seq.end());
    Path p(g, seq[0], dir);
    for (std::size_t i = 1; i < seq.size(); ++i) {
        auto arcs = p.tail_arcs();
        for (std::size_t j = 0; j < arcs.size(); ++j)
            if (arcs[j].to == seq[i]) {
                p.push(static_cast<int>(j));
                break;
            }
    }
    return p;
}

Path run_search(const Digraph& g, const Path& seed, const DfsOptions& opts,
                SearchStats* stats) {
    const auto t0 = Clock::now();
    const auto forward_deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double, std::milli>(
                 opts.budget.wall_ms * opts.forward_fraction));
    const auto full_deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double, std::milli>(opts.budget.wall_ms));

    BestTracker best;
    best.offer(seed);
    {
        Path p = reseed(g, seed.forward_verts(), Direction::forward);
        enumerate(p, best, forward_deadline, opts.budget.stagnation_iters, stats);
    }

    // Backward phase: re-seed from the best path with its first few edges
    // erased, reversed onto the in-adjacency, and keep enumerating.
    {
        std::vector<Vertex> verts = best.verts;
        int erase = std::min<int>(opts.back_erase, static_cast<int>(verts.size()) - 1);
        if (erase > 0) verts.erase(verts.begin(), verts.begin() + erase);
        Path q = reseed(g, std::move(verts), Direction::backward);
        enumerate(q, best, full_deadline, opts.budget.stagnation_iters, stats);
    }

    return Path::from_vertices(g, best.verts);
}

} // namespace

Path dfs_search(const Digraph& g, Vertex start, const DfsOptions& opts,
                SearchStats* stats) {
    Path p(g, start);
    if (opts.budget.wall_ms <= 0.0 || opts.budget.stagnation_iters == 0) return p;
    return run_search(g, p, opts, stats);
}

Path dfs_extend(const Digraph& g, const Path& seed, const DfsOptions& opts,
                SearchStats* stats) {
    if (opts.budget.wall_ms <= 0.0 || opts.budget.stagnation_iters == 0)
        return Path::from_vertices(g, seed.forward_verts());
    return run_search(g, seed, opts, stats);
}

std::vector<Vertex> choose_starts(const SccInfo& info, const ScoreTable& scores,
                                  int count) {
    const int n = static_cast<int>(info.scc_id.size());
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (info.out_rank(a) != info.out_rank(b))
            return info.out_rank(a) > info.out_rank(b);
        if (scores.score_out[a] != scores.score_out[b])
            return scores.score_out[a] > scores.score_out[b];
        return a < b;
    });
    if (count < n) order.resize(std::max(count, 0));
    return order;
}

} // namespace longpath
