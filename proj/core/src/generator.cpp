#include "longpath/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace longpath {

PlantedInstance generate_planted(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1);
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("edge count must be in [n-1, n*(n-1)]");

    Rng rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    auto key = [n](Vertex u, Vertex v) {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
    };
    std::unordered_set<std::uint64_t> used;
    used.reserve(static_cast<std::size_t>(m) * 2);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({perm[i], perm[i + 1], 1.0});
        used.insert(key(perm[i], perm[i + 1]));
    }

    std::int64_t extra = m - (n - 1);
    if (extra > max_edges - (n - 1) - extra) {
        // Dense request: sample the complement without replacement instead
        // of rejection-looping near saturation.
        std::vector<std::pair<Vertex, Vertex>> pool;
        pool.reserve(static_cast<std::size_t>(max_edges - (n - 1)));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && !used.count(key(u, v))) pool.emplace_back(u, v);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::int64_t i = 0; i < extra; ++i)
            edges.push_back({pool[i].first, pool[i].second, 1.0});
    } else {
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        while (extra > 0) {
            Vertex u = pick(rng), v = pick(rng);
            if (u == v || used.count(key(u, v))) continue;
            used.insert(key(u, v));
            edges.push_back({u, v, 1.0});
            --extra;
        }
    }

    return {Digraph::from_edges(n, edges), static_cast<double>(n - 1)};
}

Digraph generate_random_digraph(int n, double density, Rng& rng) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("density must be in [0, 1]");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (unit(rng) < density)
                edges.push_back({u, v, 1.0 - unit(rng)});  // weight in (0, 1]
        }
    return Digraph::from_edges(n, edges);
}

} // namespace longpath
