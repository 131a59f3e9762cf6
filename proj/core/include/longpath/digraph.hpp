#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace longpath {

using Vertex = int;

struct Arc {
    Vertex to = 0;
    double weight = 0.0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    double weight = 0.0;
};

// Immutable weighted digraph with dual adjacency: every edge (u -> v, w) is
// stored once in out(u) and once, mirrored, in in(v). Vertices are dense
// ids 0..n-1, weights are finite and non-negative, no self-loops, at most
// one edge per ordered pair.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n), in_(n) {}

    // Builds a graph from an edge list. Self-loops are dropped (counted in
    // self_loops_dropped), duplicate ordered pairs collapse to the maximum
    // weight. Throws std::invalid_argument on negative/non-finite weights
    // or out-of-range endpoints.
    static Digraph from_edges(int n, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(out_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const Arc> out(Vertex v) const { return out_[v]; }
    std::span<const Arc> in(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    // Linear scan of out(u); adjacency order is a search priority, not an
    // index by neighbor id.
    std::optional<double> edge_weight(Vertex u, Vertex v) const;

    // Replaces each adjacency list with a permutation of itself. Used by
    // scoring to install the exploration priority; both sides must remain
    // the same edge multiset (checked in debug builds).
    void reorder_adjacency(std::vector<std::vector<Arc>> out,
                           std::vector<std::vector<Arc>> in);

    int self_loops_dropped() const { return self_loops_dropped_; }
    int duplicates_collapsed() const { return duplicates_collapsed_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::int64_t edge_count_ = 0;
    int self_loops_dropped_ = 0;
    int duplicates_collapsed_ = 0;
};

// Error for malformed edge-list input; message carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedGraph {
    Digraph graph;
    int self_loops_dropped = 0;
};

// Text edge-list format: one "u v w" edge per line, '#' starts a comment,
// an optional leading "n m" header pins the vertex count. Without a header
// the graph spans max vertex id + 1.
ParsedGraph parse_edge_list(std::istream& input);
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph parse_edge_list_file(const std::string& path);

// Writes the same format (with header); weights keep full precision so a
// parse -> write -> parse round trip is exact.
void write_edge_list(std::ostream& out, const Digraph& g);
void write_edge_list_file(const std::string& path, const Digraph& g);

// Remaps vertices with degree > 0 to dense ids. Returns the compacted graph
// and, per new id, the original id.
std::pair<Digraph, std::vector<Vertex>> compact_ids(const Digraph& g);

} // namespace longpath
