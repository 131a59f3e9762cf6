// Command-line front end: generate benchmark instances, solve edge-list
// files, run the exact oracle on small graphs, and run benchmark suites.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "longpath/generator.hpp"
#include "longpath/oracle.hpp"
#include "longpath/solver.hpp"

namespace {

using namespace longpath;
using Clock = std::chrono::steady_clock;

std::string format_weight(double w) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", w);
    return buf;
}

void print_path_and_weight(const std::vector<Vertex>& path, double weight) {
    for (std::size_t i = 0; i < path.size(); ++i)
        std::cout << path[i] << (i + 1 < path.size() ? ' ' : '\n');
    if (path.empty()) std::cout << '\n';
    std::cout << "weight " << format_weight(weight) << '\n';
}

int cmd_gen(int n, long long m, std::uint64_t seed, const std::string& out) {
    PlantedInstance inst = generate_planted(n, m, seed);
    write_edge_list_file(out, inst.graph);
    std::cout << "wrote " << out << ": " << n << " vertices, "
              << inst.graph.edge_count() << " edges, optimum "
              << format_weight(inst.optimal_weight) << '\n';
    return 0;
}

int cmd_solve(const std::string& file, SolverConfig cfg, const std::string& out,
              const std::string& report_format) {
    Digraph g = parse_edge_list_file(file).graph;
    SolveReport report = solve(g, cfg);
    print_path_and_weight(report.path, report.weight);

    const std::string rendered = report_format == "json"
        ? report_to_json(report)
        : report_to_text(report);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open " + out);
        f << rendered << '\n';
    } else if (report_format == "json") {
        std::cout << rendered << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& file, int cap) {
    Digraph g = parse_edge_list_file(file).graph;
    OracleResult r = brute_force_lsp(g, cap);
    print_path_and_weight(r.verts, r.weight);
    return 0;
}

int bench_small() {
    // 200 seeded instances, n in [2, 10], densities {0.2, 0.5, 0.8},
    // weights in (0, 1]; optimality measured against the exact oracle.
    const double densities[] = {0.2, 0.5, 0.8};
    int optimal = 0;
    const auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        Rng rng(9000 + i);
        const int n = 2 + i % 9;
        const double density = densities[(i / 9) % 3];
        Digraph g = generate_random_digraph(n, density, rng);

        SolverConfig cfg;
        cfg.budget_ms = 100.0;
        cfg.seed = 9000 + i;
        OracleResult exact = brute_force_lsp(g);
        SolveReport got = solve(g, cfg);
        if (std::abs(got.weight - exact.weight) <= 1e-9) ++optimal;
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "small suite: " << optimal << "/200 optimal in " << secs
              << " s\n";
    return optimal == 200 ? 0 : 1;
}

int bench_planted(bool full_scale) {
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PlantedInstance inst = generate_planted(1000, 10000, seed);
        SolverConfig cfg;
        cfg.budget_ms = 10'000.0;
        cfg.seed = seed;
        cfg.stop_weight = inst.optimal_weight;
        const auto t0 = Clock::now();
        SolveReport report = solve(inst.graph, cfg);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool hit = report.weight == inst.optimal_weight;
        hits += hit;
        std::cout << "planted n=1000 m=10000 seed=" << seed << ": weight "
                  << format_weight(report.weight) << " (optimum "
                  << format_weight(inst.optimal_weight) << ") in " << secs
                  << " s\n";
    }
    std::cout << "desk scale: " << hits << "/10 optimal\n";

    if (full_scale) {
        PlantedInstance inst = generate_planted(10'000, 100'000, 1);
        SolverConfig cfg;
        cfg.budget_ms = 60'000.0;
        cfg.seed = 1;
        cfg.stop_weight = inst.optimal_weight;
        const auto t0 = Clock::now();
        SolveReport report = solve(inst.graph, cfg);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << "planted n=10000 m=100000: weight "
                  << format_weight(report.weight) << " (optimum "
                  << format_weight(inst.optimal_weight) << ") in " << secs
                  << " s\n";
        return hits >= 9 && report.weight == inst.optimal_weight ? 0 : 1;
    }
    return hits >= 9 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heuristic long-simple-path solver for weighted digraphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a planted-path instance");
    int gen_n = 1000;
    long long gen_m = 10000;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--m", gen_m, "Edge count")->required();
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--out", gen_out, "Output edge-list file")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Find a long simple path");
    std::string solve_file, solve_config, solve_out;
    std::string solve_report = "text";
    double solve_budget = -1.0;
    std::uint64_t solve_seed = 0;
    bool solve_seed_set = false, solve_budget_set = false;
    int solve_workers = 0;
    solve_cmd->add_option("file", solve_file, "Edge-list input file")->required();
    solve_cmd->add_option("--budget-ms", solve_budget, "Total time budget")
        ->each([&](const std::string&) { solve_budget_set = true; });
    solve_cmd->add_option("--seed", solve_seed, "Random seed")
        ->each([&](const std::string&) { solve_seed_set = true; });
    solve_cmd->add_option("--workers", solve_workers, "Parallel pipelines");
    solve_cmd->add_option("--config", solve_config, "JSON config file");
    solve_cmd->add_option("--out", solve_out, "Write the report to this file");
    solve_cmd->add_option("--report", solve_report, "Report format")
        ->check(CLI::IsMember({"json", "text"}));

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact answer (small graphs)");
    std::string oracle_file;
    int oracle_cap = 12;
    oracle_cmd->add_option("file", oracle_file, "Edge-list input file")->required();
    oracle_cmd->add_option("--cap", oracle_cap, "Largest vertex count accepted");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
    std::string bench_suite;
    bool bench_full = false;
    bench_cmd->add_option("--suite", bench_suite, "planted or small")
        ->required()
        ->check(CLI::IsMember({"planted", "small"}));
    bench_cmd->add_flag("--full", bench_full, "Include the n=10000 planted run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(gen_n, gen_m, gen_seed, gen_out);
        if (*solve_cmd) {
            SolverConfig cfg;
            if (!solve_config.empty()) cfg = load_config_file(solve_config);
            if (solve_budget_set) cfg.budget_ms = solve_budget;
            if (solve_seed_set) cfg.seed = solve_seed;
            if (solve_workers > 0) cfg.workers = solve_workers;
            cfg.validate();
            return cmd_solve(solve_file, cfg, solve_out, solve_report);
        }
        if (*oracle_cmd) return cmd_oracle(oracle_file, oracle_cap);
        if (*bench_cmd)
            return bench_suite == "small" ? bench_small() : bench_planted(bench_full);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
