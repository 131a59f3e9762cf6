#include "longpath/pto.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace longpath {

PseudoTopoOrder::PseudoTopoOrder(std::vector<Vertex> order)
    : order_(std::move(order)),
      inv_(order_.size()),
      value_(order_.size(), 0.0),
      first_dirty_(0) {
    for (int i = 0; i < size(); ++i) inv_[order_[i]] = i;
}

void PseudoTopoOrder::recompute_from(const Digraph& g, int pos) {
    const int n = size();
    assert(pos >= 0 && pos <= n);
    assert(pos <= first_dirty_ && "values below pos must already be valid");
    for (int i = pos; i < n; ++i) {
        Vertex v = order_[i];
        double best = 0.0;
        for (const Arc& a : g.in(v))
            if (inv_[a.to] < i) best = std::max(best, value_[a.to] + a.weight);
        value_[v] = best;
    }
    first_dirty_ = n;
}

double PseudoTopoOrder::best_value(const Digraph& g) {
    if (first_dirty_ < size()) recompute_from(g, first_dirty_);
    double best = 0.0;
    for (double x : value_) best = std::max(best, x);
    return best;
}

Path PseudoTopoOrder::longest_path(const Digraph& g) {
    const int n = size();
    if (first_dirty_ < n) recompute_from(g, first_dirty_);

    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v)
        if (value_[v] > value_[best]) best = v;

    // Re-derive predecessors instead of storing them: scan in-neighbors
    // for one that realizes the DP value, smallest id on ties.
    std::vector<Vertex> verts{best};
    Vertex v = best;
    while (value_[v] != 0.0) {
        Vertex pred = -1;
        for (const Arc& a : g.in(v)) {
            if (inv_[a.to] < inv_[v] && value_[a.to] + a.weight == value_[v] &&
                (pred == -1 || a.to < pred))
                pred = a.to;
        }
        assert(pred != -1 && "DP value must be realized by some in-arc");
        verts.push_back(pred);
        v = pred;
    }
    std::reverse(verts.begin(), verts.end());

    Path p = Path::from_vertices(g, verts);
    assert(std::abs(p.weight() - value_[best]) <=
           1e-9 * std::max(1.0, value_[best]));
    return p;
}

void PseudoTopoOrder::impose(const Digraph& g, const Path& p) {
    const auto seq = p.forward_verts();
    if (!is_simple_path(g, seq))
        throw std::invalid_argument("can only impose a simple path of the same graph");

    std::vector<int> positions(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0 || seq[i] >= size())
            throw std::invalid_argument("path vertex out of range for this order");
        positions[i] = inv_[seq[i]];
    }
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int pos = positions[i];
        if (order_[pos] != seq[i]) {
            order_[pos] = seq[i];
            inv_[seq[i]] = pos;
            mark_dirty(pos);
        }
    }
}

void PseudoTopoOrder::swap_positions(int a, int b) {
    if (a == b) return;
    std::swap(order_[a], order_[b]);
    inv_[order_[a]] = a;
    inv_[order_[b]] = b;
    mark_dirty(std::min(a, b));
}

void PseudoTopoOrder::assign_range(int from, std::span<const Vertex> new_suffix) {
    for (std::size_t i = 0; i < new_suffix.size(); ++i) {
        int pos = from + static_cast<int>(i);
        if (order_[pos] != new_suffix[i]) {
            order_[pos] = new_suffix[i];
            inv_[new_suffix[i]] = pos;
            mark_dirty(pos);
        }
    }
}

bool PseudoTopoOrder::check_inverse() const {
    for (int i = 0; i < size(); ++i)
        if (inv_[order_[i]] != i) return false;
    return true;
}

PseudoTopoOrder random_pto(const Digraph& g, const SccInfo& info, Rng& rng) {
    const int c = info.scc_count;

    // Random topological order of the skeleton: repeatedly take a uniform
    // pick among the components with no unplaced predecessor.
    std::vector<int> indegree(c, 0);
    for (int u = 0; u < c; ++u)
        for (int v : info.skeleton[u]) ++indegree[v];
    std::vector<int> ready;
    for (int u = 0; u < c; ++u)
        if (indegree[u] == 0) ready.push_back(u);

    std::vector<Vertex> order;
    order.reserve(g.vertex_count());
    while (!ready.empty()) {
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
        int comp = ready[pick];
        ready[pick] = ready.back();
        ready.pop_back();

        // Explode the component: its block is a uniform shuffle.
        std::size_t block_start = order.size();
        auto members = info.members(comp);
        order.insert(order.end(), members.begin(), members.end());
        std::shuffle(order.begin() + block_start, order.end(), rng);

        for (int v : info.skeleton[comp])
            if (--indegree[v] == 0) ready.push_back(v);
    }
    assert(static_cast<int>(order.size()) == g.vertex_count());
    return PseudoTopoOrder(std::move(order));
}

bool is_strong_pto(const Digraph& g, const SccInfo& info,
                   std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (Vertex y = 0; y < n; ++y)
        for (const Arc& a : g.out(y)) {
            Vertex x = a.to;
            if (pos[x] >= pos[y]) continue;  // forward edge
            int comp = info.scc_id[y];
            if (info.scc_id[x] != comp) return false;
            for (int i = pos[x]; i <= pos[y]; ++i)
                if (info.scc_id[order[i]] != comp) return false;
        }
    return true;
}

} // namespace longpath
