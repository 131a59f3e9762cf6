#include "longpath/path.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace longpath {

Path::Path(const Digraph& g, Vertex start, Direction dir)
    : graph_(&g), dir_(dir), in_path_(g.vertex_count(), 0) {
    assert(start >= 0 && start < g.vertex_count());
    verts_.push_back(start);
    in_path_[start] = 1;
}

Path Path::from_vertices(const Digraph& g, std::span<const Vertex> seq) {
    if (seq.empty()) throw std::invalid_argument("path must be nonempty");
    Path p(g, seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i) {
        auto arcs = g.out(seq[i - 1]);
        int idx = -1;
        for (std::size_t j = 0; j < arcs.size(); ++j)
            if (arcs[j].to == seq[i]) {
                idx = static_cast<int>(j);
                break;
            }
        if (idx < 0 || p.contains(seq[i]))
            throw std::invalid_argument("sequence is not a simple path");
        p.push(idx);
    }
    return p;
}

std::span<const Arc> Path::tail_arcs() const {
    return dir_ == Direction::forward ? graph_->out(tail()) : graph_->in(tail());
}

void Path::push(int arc_index) {
    const Arc& a = tail_arcs()[arc_index];
    assert(!in_path_[a.to]);
    arc_taken_.push_back(arc_index);
    verts_.push_back(a.to);
    in_path_[a.to] = 1;
    weight_ += a.weight;
}

int Path::pop() {
    assert(size() > 1);
    Vertex last = verts_.back();
    verts_.pop_back();
    in_path_[last] = 0;
    int idx = arc_taken_.back();
    arc_taken_.pop_back();
    weight_ -= tail_arcs()[idx].weight;
    return idx;
}

void Path::erase_front(int edges) {
    assert(edges >= 0 && edges < size());
    if (edges == 0) return;
    for (int i = 0; i < edges; ++i) {
        in_path_[verts_[i]] = 0;
        auto arcs = dir_ == Direction::forward ? graph_->out(verts_[i])
                                               : graph_->in(verts_[i]);
        weight_ -= arcs[arc_taken_[i]].weight;
    }
    verts_.erase(verts_.begin(), verts_.begin() + edges);
    arc_taken_.erase(arc_taken_.begin(), arc_taken_.begin() + edges);
}

std::vector<Vertex> Path::forward_verts() const {
    std::vector<Vertex> v = verts_;
    if (dir_ == Direction::backward) std::reverse(v.begin(), v.end());
    return v;
}

bool Path::check_invariants() const {
    if (verts_.empty()) return false;
    if (arc_taken_.size() + 1 != verts_.size()) return false;
    std::vector<char> seen(graph_->vertex_count(), 0);
    double w = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        Vertex v = verts_[i];
        if (seen[v] || !in_path_[v]) return false;
        seen[v] = 1;
        if (i + 1 < verts_.size()) {
            auto arcs = dir_ == Direction::forward ? graph_->out(v) : graph_->in(v);
            int idx = arc_taken_[i];
            if (idx < 0 || idx >= static_cast<int>(arcs.size())) return false;
            if (arcs[idx].to != verts_[i + 1]) return false;
            w += arcs[idx].weight;
        }
    }
    for (Vertex v = 0; v < graph_->vertex_count(); ++v)
        if (in_path_[v] && !seen[v]) return false;
    return std::abs(w - weight_) <= 1e-9 * std::max(1.0, std::abs(w));
}

bool is_simple_path(const Digraph& g, std::span<const Vertex> seq) {
    if (seq.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Vertex v = seq[i];
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !g.edge_weight(seq[i - 1], v)) return false;
    }
    return true;
}

double path_weight(const Digraph& g, std::span<const Vertex> seq) {
    if (!is_simple_path(g, seq))
        throw std::invalid_argument("sequence is not a simple path");
    double w = 0.0;
    for (std::size_t i = 1; i < seq.size(); ++i) w += *g.edge_weight(seq[i - 1], seq[i]);
    return w;
}

} // namespace longpath
