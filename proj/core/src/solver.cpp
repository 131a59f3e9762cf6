#include "longpath/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace longpath {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

Clock::time_point after_ms(Clock::time_point t, double ms) {
    return t + std::chrono::duration_cast<Clock::duration>(
                   std::chrono::duration<double, std::milli>(std::max(ms, 0.0)));
}

// splitmix64 step; decorrelates per-worker streams drawn from one seed.
std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index) {
    std::uint64_t x = root + 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct StartPlan {
    Vertex start = 0;
    int comp = 0;  // weak component id
};

// Highest-priority starts of every weak component, interleaved so a prefix
// of the list still covers all components.
std::vector<StartPlan> plan_starts(const PreprocessedGraph& pre, const SolverConfig& cfg) {
    const int n = pre.graph.vertex_count();
    const int per_comp = cfg.starts_count > 0 ? cfg.starts_count
                       : n <= 64              ? n
                                              : 4;
    std::vector<Vertex> ordered = choose_starts(pre.info, pre.scores, n);
    std::vector<std::vector<Vertex>> by_comp(pre.info.wcc_count);
    for (Vertex v : ordered) {
        auto& bucket = by_comp[pre.info.wcc_id[v]];
        if (static_cast<int>(bucket.size()) < per_comp) bucket.push_back(v);
    }
    std::vector<StartPlan> plan;
    for (int round = 0; round < per_comp; ++round)
        for (int c = 0; c < pre.info.wcc_count; ++c)
            if (round < static_cast<int>(by_comp[c].size()))
                plan.push_back({by_comp[c][round], c});
    return plan;
}

struct CandidateBest {
    std::vector<Vertex> verts;
    double weight = -1.0;
};

struct WorkerResult {
    CandidateBest best;
    SearchStats dfs_stats;
    SearchStats improve_stats;
    double dfs_ms = 0.0;
    double improve_ms = 0.0;
};

bool better(const CandidateBest& a, const CandidateBest& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.verts < b.verts;
}

// Consecutive non-improving improvement rounds tolerated per candidate;
// each round redraws fresh pseudo-topological orders.
constexpr int kImprovePatience = 64;

WorkerResult run_pipeline(const PreprocessedGraph& pre, const SolverConfig& cfg,
                          std::span<const StartPlan> starts,
                          std::uint64_t stream_seed,
                          Clock::time_point dfs_deadline,
                          Clock::time_point global_deadline,
                          std::atomic<bool>& stop) {
    const Digraph& g = pre.graph;
    WorkerResult result;
    Rng rng(stream_seed);

    auto reached_target = [&](double w) {
        return cfg.stop_weight > 0.0 && w >= cfg.stop_weight;
    };

    // DFS phase: adaptive round-robin, each start gets an equal share of
    // what is left of this worker's window.
    const auto dfs_begin = Clock::now();
    std::vector<CandidateBest> comp_best(pre.info.wcc_count);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (stop.load(std::memory_order_relaxed)) break;
        const auto now = Clock::now();
        if (now >= dfs_deadline) break;
        const double slice =
            ms_between(now, dfs_deadline) / static_cast<double>(starts.size() - i);

        DfsOptions opts;
        opts.budget.wall_ms = slice;
        opts.budget.stagnation_iters = cfg.stagnation_iters;
        opts.back_erase = cfg.back_erase;
        opts.forward_fraction = cfg.forward_fraction;
        Path p = dfs_search(g, starts[i].start, opts, &result.dfs_stats);

        CandidateBest& cb = comp_best[starts[i].comp];
        if (p.weight() > cb.weight) {
            cb.weight = p.weight();
            cb.verts = p.forward_verts();
            if (reached_target(cb.weight)) {
                stop.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    result.dfs_ms = ms_between(dfs_begin, Clock::now());

    // Improvement phase: candidates ordered heaviest first, sharing what
    // remains of the budget.
    const auto improve_begin = Clock::now();
    const auto improve_deadline =
        cfg.improve_budget_ms > 0.0
            ? after_ms(improve_begin, cfg.improve_budget_ms)
            : global_deadline;

    std::vector<CandidateBest*> candidates;
    for (auto& cb : comp_best)
        if (cb.weight >= 0.0) candidates.push_back(&cb);
    std::sort(candidates.begin(), candidates.end(),
              [](const CandidateBest* a, const CandidateBest* b) { return better(*a, *b); });

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (stop.load(std::memory_order_relaxed)) break;
        CandidateBest& cb = *candidates[i];
        if (cb.verts.size() == 1 && g.out_degree(cb.verts[0]) == 0 &&
            g.in_degree(cb.verts[0]) == 0)
            continue;  // isolated vertex, nothing to open

        auto now = Clock::now();
        if (now >= improve_deadline) break;
        const double slice = ms_between(now, improve_deadline) /
                             static_cast<double>(candidates.size() - i);
        const auto candidate_deadline = after_ms(now, slice);

        Path p = Path::from_vertices(g, cb.verts);
        int stale_rounds = 0;
        while (stale_rounds < kImprovePatience) {
            now = Clock::now();
            if (now >= candidate_deadline || stop.load(std::memory_order_relaxed)) break;
            ImproveOptions iopts;
            iopts.budget_ms = ms_between(now, candidate_deadline);
            iopts.strategy = cfg.strategy;
            iopts.refine_steps_factor = cfg.refine_steps_factor;
            const double before = p.weight();
            p = improve_path(g, pre.info, std::move(p), iopts, rng, &result.improve_stats);
            if (p.weight() > before) {
                stale_rounds = 0;
                if (reached_target(p.weight())) {
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
            } else {
                ++stale_rounds;
            }
        }
        if (p.weight() > cb.weight) {
            cb.weight = p.weight();
            cb.verts = p.forward_verts();
        }
    }
    result.improve_ms = ms_between(improve_begin, Clock::now());

    for (const auto& cb : comp_best)
        if (cb.weight >= 0.0 && better(cb, result.best)) result.best = cb;
    return result;
}

SolveReport solve_impl(const PreprocessedGraph& pre, const SolverConfig& cfg,
                       double preprocess_ms) {
    cfg.validate();
    const auto t0 = Clock::now();
    SolveReport report;
    report.seed = cfg.seed;
    report.preprocess_ms = preprocess_ms;

    const int n = pre.graph.vertex_count();
    if (n == 0) {
        report.total_ms = preprocess_ms;
        return report;
    }

    const auto plan = plan_starts(pre, cfg);
    const auto dfs_deadline = after_ms(t0, cfg.budget_ms * cfg.dfs_fraction);
    const auto global_deadline = after_ms(t0, cfg.budget_ms);
    std::atomic<bool> stop{false};

    const int workers =
        std::max(1, std::min(cfg.workers, static_cast<int>(plan.size())));
    std::vector<std::vector<StartPlan>> assignment(workers);
    for (std::size_t i = 0; i < plan.size(); ++i)
        assignment[i % workers].push_back(plan[i]);

    std::vector<WorkerResult> results(workers);
    if (workers == 1) {
        results[0] = run_pipeline(pre, cfg, assignment[0], derive_stream(cfg.seed, 0),
                                  dfs_deadline, global_deadline, stop);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                results[w] = run_pipeline(pre, cfg, assignment[w],
                                          derive_stream(cfg.seed, w), dfs_deadline,
                                          global_deadline, stop);
            });
        for (auto& t : threads) t.join();
    }

    CandidateBest best;
    for (const auto& r : results) {
        if (r.best.weight >= 0.0 && better(r.best, best)) best = r.best;
        report.iterations += r.dfs_stats.iterations + r.improve_stats.iterations;
        report.improvements += r.dfs_stats.improvements + r.improve_stats.improvements;
        report.dfs_ms = std::max(report.dfs_ms, r.dfs_ms);
        report.improve_ms = std::max(report.improve_ms, r.improve_ms);
    }
    if (best.weight < 0.0) {
        // No start ran (zero budget): fall back to the first planned start.
        best.verts = {plan.empty() ? 0 : plan[0].start};
        best.weight = 0.0;
    }
    report.path = std::move(best.verts);
    report.weight = best.weight;
    report.total_ms = preprocess_ms + ms_between(t0, Clock::now());
    assert(is_simple_path(pre.graph, report.path));
    return report;
}

} // namespace

PreprocessedGraph preprocess(const Digraph& g, const SolverConfig& cfg) {
    cfg.validate();
    PreprocessedGraph pre;
    pre.info = analyze_components(g);
    WalkWeightTables tables = path_weight_sums(g, cfg.score_depth_k);
    pre.scores = vertex_scores(std::move(tables), cfg.score_coeffs);
    pre.graph = order_neighbors(g, pre.scores, pre.info, cfg.low_indegree_threshold);
    return pre;
}

SolveReport solve(const PreprocessedGraph& pre, const SolverConfig& cfg) {
    return solve_impl(pre, cfg, 0.0);
}

SolveReport solve(const Digraph& g, const SolverConfig& cfg) {
    const auto t0 = Clock::now();
    PreprocessedGraph pre = preprocess(g, cfg);
    const double pre_ms = ms_between(t0, Clock::now());
    return solve_impl(pre, cfg, pre_ms);
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::json j{
        {"path", report.path},
        {"weight", report.weight},
        {"phase_timings_ms",
         {{"preprocess", report.preprocess_ms},
          {"dfs", report.dfs_ms},
          {"improve", report.improve_ms},
          {"total", report.total_ms}}},
        {"seed", report.seed},
        {"iterations", report.iterations},
    };
    return j.dump(2);
}

std::string report_to_text(const SolveReport& report) {
    std::ostringstream out;
    out << "weight        " << report.weight << '\n';
    out << "path length   " << report.path.size() << " vertices\n";
    out << "seed          " << report.seed << '\n';
    out << "iterations    " << report.iterations << '\n';
    out << "improvements  " << report.improvements << '\n';
    out << "timings ms    preprocess " << report.preprocess_ms << ", dfs "
        << report.dfs_ms << ", improve " << report.improve_ms << ", total "
        << report.total_ms << '\n';
    return out.str();
}

} // namespace longpath
