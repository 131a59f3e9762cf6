#include "longpath/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace longpath {

void SolverConfig::validate() const {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("config: " + what);
    };
    if (score_depth_k < 1) fail("score_depth_k must be >= 1");
    if (static_cast<int>(score_coeffs.size()) != score_depth_k)
        fail("score_coeffs must have score_depth_k entries");
    for (double c : score_coeffs)
        if (!(c > 0.0)) fail("score_coeffs entries must be > 0");
    if (low_indegree_threshold < 0) fail("low_indegree_threshold must be >= 0");
    if (budget_ms < 0.0) fail("budget_ms must be >= 0");
    if (back_erase < 0) fail("back_erase must be >= 0");
    if (starts_count < 0) fail("starts_count must be >= 0");
    if (!(forward_fraction > 0.0 && forward_fraction <= 1.0))
        fail("forward_fraction must be in (0, 1]");
    if (improve_budget_ms < 0.0) fail("improve_budget_ms must be >= 0");
    if (!(refine_steps_factor >= 0.0)) fail("refine_steps_factor must be >= 0");
    if (!(dfs_fraction > 0.0 && dfs_fraction < 1.0))
        fail("dfs_fraction must be in (0, 1)");
    if (workers < 1) fail("workers must be >= 1");
    if (stop_weight < 0.0) fail("stop_weight must be >= 0");
}

ImproveStrategy strategy_from_string(const std::string& name) {
    if (name == "basic") return ImproveStrategy::basic;
    if (name == "reverse") return ImproveStrategy::reverse;
    if (name == "heuristic") return ImproveStrategy::heuristic;
    if (name == "all") return ImproveStrategy::all;
    throw std::invalid_argument("unknown strategy: " + name);
}

std::string to_string(ImproveStrategy s) {
    switch (s) {
        case ImproveStrategy::basic: return "basic";
        case ImproveStrategy::reverse: return "reverse";
        case ImproveStrategy::heuristic: return "heuristic";
        case ImproveStrategy::all: return "all";
    }
    return "all";
}

SolverConfig load_config_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    SolverConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "score_depth_k") cfg.score_depth_k = value.get<int>();
        else if (key == "score_coeffs") cfg.score_coeffs = value.get<std::vector<double>>();
        else if (key == "low_indegree_threshold") cfg.low_indegree_threshold = value.get<int>();
        else if (key == "budget_ms") cfg.budget_ms = value.get<double>();
        else if (key == "stagnation_iters") cfg.stagnation_iters = value.get<std::uint64_t>();
        else if (key == "back_erase") cfg.back_erase = value.get<int>();
        else if (key == "starts_count") cfg.starts_count = value.get<int>();
        else if (key == "forward_fraction") cfg.forward_fraction = value.get<double>();
        else if (key == "improve_budget_ms") cfg.improve_budget_ms = value.get<double>();
        else if (key == "refine_steps_factor") cfg.refine_steps_factor = value.get<double>();
        else if (key == "strategy") cfg.strategy = strategy_from_string(value.get<std::string>());
        else if (key == "dfs_fraction") cfg.dfs_fraction = value.get<double>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "workers") cfg.workers = value.get<int>();
        else if (key == "stop_weight") cfg.stop_weight = value.get<double>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

SolverConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config_json(buf.str());
}

} // namespace longpath
