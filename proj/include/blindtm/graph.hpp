#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blindtm {

/// Vertices are numbered 1..n.
using Vertex = int;

/// Sorted, duplicate-free list of vertices (or matrix columns).
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v, in lexicographic order.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

    /// Sorted neighbourhood N(v).
    const std::vector<Vertex>& neighbors(Vertex v) const;

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const noexcept;

    /// Subgraph induced by `subset`; vertex subset[i] becomes i+1.
    Graph induced(const VertexSet& subset) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Directed graph without self-loops on vertices 1..n.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

    int order() const noexcept { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& arcs() const noexcept { return arcs_; }

    bool has_arc(Vertex from, Vertex to) const;
    const std::vector<Vertex>& out_neighbors(Vertex v) const;
    /// {u : (u, v) is an arc}
    const std::vector<Vertex>& in_neighbors(Vertex v) const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// Line-oriented text format:
//   graph <n> | digraph <n>
//   edge <u> <v> | arc <u> <v>
// '#' starts a comment.

Graph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);

std::string serialize_graph(const Graph& g);
std::string serialize_digraph(const Digraph& d);

/// Renders a set as "{1, 4}".
std::string format_set(const VertexSet& s);

} // namespace blindtm
