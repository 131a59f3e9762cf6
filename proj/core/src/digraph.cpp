#include "longpath/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace longpath {

Digraph Digraph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");

    std::vector<Edge> kept;
    kept.reserve(edges.size());
    int self_loops = 0;
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!std::isfinite(e.weight) || e.weight < 0.0)
            throw std::invalid_argument("edge weight must be finite and >= 0");
        if (e.from == e.to) {
            ++self_loops;
            continue;
        }
        kept.push_back(e);
    }

    // Collapse duplicate ordered pairs to the max weight.
    std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.weight > b.weight;
    });

    Digraph g(n);
    g.self_loops_dropped_ = self_loops;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (i > 0 && kept[i].from == kept[i - 1].from && kept[i].to == kept[i - 1].to) {
            ++g.duplicates_collapsed_;
            continue;
        }
        g.out_[kept[i].from].push_back({kept[i].to, kept[i].weight});
        g.in_[kept[i].to].push_back({kept[i].from, kept[i].weight});
        ++g.edge_count_;
    }
    return g;
}

std::optional<double> Digraph::edge_weight(Vertex u, Vertex v) const {
    for (const Arc& a : out_[u])
        if (a.to == v) return a.weight;
    return std::nullopt;
}

void Digraph::reorder_adjacency(std::vector<std::vector<Arc>> out,
                                std::vector<std::vector<Arc>> in) {
    assert(out.size() == out_.size() && in.size() == in_.size());
#ifndef NDEBUG
    for (std::size_t v = 0; v < out_.size(); ++v) {
        auto a = out_[v], b = out[v];
        auto key = [](const Arc& x, const Arc& y) {
            return x.to != y.to ? x.to < y.to : x.weight < y.weight;
        };
        std::sort(a.begin(), a.end(), key);
        std::sort(b.begin(), b.end(), key);
        assert(a == b && "reorder must permute the out adjacency");
    }
#endif
    out_ = std::move(out);
    in_ = std::move(in);
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

ParsedGraph parse_edge_list(std::istream& input) {
    std::vector<Edge> edges;
    int header_n = -1;
    bool saw_content = false;
    Vertex max_vertex = -1;

    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;

        std::istringstream fields(line);
        long long u = 0, v = 0;
        double w = 0.0;
        if (!(fields >> u >> v))
            throw ParseError(line_no, "expected \"u v w\"");

        bool has_weight = static_cast<bool>(fields >> w);
        std::string trailing;
        if (fields >> trailing)
            throw ParseError(line_no, "trailing tokens after \"u v w\"");

        if (!has_weight) {
            // Two tokens: only valid as the leading "n m" header.
            if (saw_content)
                throw ParseError(line_no, "expected \"u v w\"");
            if (u < 0 || v < 0)
                throw ParseError(line_no, "header counts must be >= 0");
            header_n = static_cast<int>(u);
            saw_content = true;
            continue;
        }

        saw_content = true;
        if (u < 0 || v < 0)
            throw ParseError(line_no, "vertex ids must be >= 0");
        if (!std::isfinite(w))
            throw ParseError(line_no, "weight must be finite");
        if (w < 0.0)
            throw ParseError(line_no, "negative weight rejected");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
        max_vertex = std::max({max_vertex, static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }

    int n = header_n >= 0 ? std::max(header_n, max_vertex + 1) : max_vertex + 1;
    ParsedGraph result;
    result.graph = Digraph::from_edges(n, edges);
    result.self_loops_dropped = result.graph.self_loops_dropped();
    return result;
}

ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

ParsedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    char buf[32];
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Arc& a : g.out(u)) {
            std::snprintf(buf, sizeof buf, "%.17g", a.weight);
            out << u << ' ' << a.to << ' ' << buf << '\n';
        }
    }
}

void write_edge_list_file(const std::string& path, const Digraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_edge_list(out, g);
}

std::pair<Digraph, std::vector<Vertex>> compact_ids(const Digraph& g) {
    std::vector<Vertex> old_ids;
    std::vector<Vertex> remap(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) > 0 || g.in_degree(v) > 0) {
            remap[v] = static_cast<Vertex>(old_ids.size());
            old_ids.push_back(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (const Arc& a : g.out(u))
            edges.push_back({remap[u], remap[a.to], a.weight});
    return {Digraph::from_edges(static_cast<int>(old_ids.size()), edges),
            std::move(old_ids)};
}

} // namespace longpath
