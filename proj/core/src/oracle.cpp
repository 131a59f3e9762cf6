#include "longpath/oracle.hpp"

#include <stdexcept>

namespace longpath {

namespace {

struct BruteState {
    const Digraph* g;
    std::vector<Vertex> current;
    std::vector<char> used;
    double weight = 0.0;
    OracleResult best;

    void consider() {
        if (weight > best.weight ||
            (weight == best.weight &&
             (best.verts.empty() || current < best.verts)))
            best = {current, weight};
    }

    void extend(Vertex v) {
        used[v] = 1;
        current.push_back(v);
        consider();
        for (const Arc& a : g->out(v)) {
            if (used[a.to]) continue;
            weight += a.weight;
            extend(a.to);
            weight -= a.weight;
        }
        current.pop_back();
        used[v] = 0;
    }
};

} // namespace

OracleResult brute_force_lsp(const Digraph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw std::invalid_argument("graph too large for exhaustive search");
    if (n == 0) return {};

    BruteState state;
    state.g = &g;
    state.used.assign(n, 0);
    state.best.weight = -1.0;
    for (Vertex v = 0; v < n; ++v) state.extend(v);
    return state.best;
}

} // namespace longpath
