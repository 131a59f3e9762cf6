#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "longpath/edge_opening.hpp"

namespace longpath {

// Every tunable of the pipeline. Defaults are usable as-is; validate()
// throws std::invalid_argument naming the offending field.
struct SolverConfig {
    // scoring
    int score_depth_k = 3;
    std::vector<double> score_coeffs = {1.0, 1.0, 1.0};
    int low_indegree_threshold = 1;

    // DFS phase
    double budget_ms = 1000.0;            // total solve budget
    std::uint64_t stagnation_iters = 200'000;
    int back_erase = 3;
    int starts_count = 0;                 // 0 = automatic per graph size
    double forward_fraction = 0.7;        // forward share within one DFS run

    // improvement phase
    double improve_budget_ms = 0.0;       // 0 = whatever budget_ms leaves
    double refine_steps_factor = 4.0;
    ImproveStrategy strategy = ImproveStrategy::all;

    // orchestration
    double dfs_fraction = 0.5;            // share of budget_ms given to DFS
    std::uint64_t seed = 1;
    int workers = 1;
    double stop_weight = 0.0;             // > 0: return early at this weight

    void validate() const;
};

ImproveStrategy strategy_from_string(const std::string& name);
std::string to_string(ImproveStrategy s);

// Reads a JSON object of config fields; unknown keys are an error, absent
// keys keep their defaults.
SolverConfig load_config_json(const std::string& text);
SolverConfig load_config_file(const std::string& path);

} // namespace longpath
