#include "blindtm/graph.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blindtm {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n), adjacency_(n + 1)
{
    if (n < 0)
        throw std::invalid_argument("graph order must be nonnegative");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " not in [1, " + std::to_string(n_) + "]");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

int Graph::degree(Vertex v) const
{
    return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& adj : adjacency_)
        best = std::max(best, adj.size());
    return static_cast<int>(best);
}

Graph Graph::induced(const VertexSet& subset) const
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (adjacent(subset[a], subset[b]))
                edges.emplace_back(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
    return Graph(static_cast<int>(subset.size()), edges);
}

Digraph::Digraph(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) : n_(n), out_(n + 1), in_(n + 1)
{
    if (n < 0)
        throw std::invalid_argument("digraph order must be nonnegative");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto a : arcs) {
        if (a.first < 1 || a.first > n || a.second < 1 || a.second > n)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.first == a.second)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(a.first));
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate arc " + std::to_string(a.first) + "->" + std::to_string(a.second));
    }
    arcs_.assign(seen.begin(), seen.end());
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& l : in_)
        std::sort(l.begin(), l.end());
}

void Digraph::check_vertex(Vertex v) const
{
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " not in [1, " + std::to_string(n_) + "]");
}

bool Digraph::has_arc(Vertex from, Vertex to) const
{
    const auto& out = out_neighbors(from);
    return std::binary_search(out.begin(), out.end(), to);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const
{
    check_vertex(v);
    return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const
{
    check_vertex(v);
    return in_[v];
}

namespace {

struct RawGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

RawGraph parse_raw(std::string_view text, bool directed)
{
    const std::string header = directed ? "digraph" : "graph";
    const std::string item = directed ? "arc" : "edge";

    auto lines = text::tokenize(text);
    if (lines.empty())
        throw ParseError(0, "empty input, expected '" + header + " <n>'");

    const auto& head = lines.front();
    if (head.tokens[0] != header || head.tokens.size() != 2)
        throw ParseError(head.number, "expected '" + header + " <n>'");
    RawGraph raw;
    auto n = text::parse_int(head.tokens[1], head.number, "vertex count");
    if (n < 0 || n > 1'000'000)
        throw ParseError(head.number, "vertex count out of range");
    raw.n = static_cast<int>(n);

    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] != item || line.tokens.size() != 3)
            throw ParseError(line.number, "expected '" + item + " <u> <v>'");
        auto u = text::parse_int(line.tokens[1], line.number, "endpoint");
        auto v = text::parse_int(line.tokens[2], line.number, "endpoint");
        if (u < 1 || u > raw.n || v < 1 || v > raw.n)
            throw ParseError(line.number, "vertex index out of range [1, " + std::to_string(raw.n) + "]");
        if (u == v)
            throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
        std::pair<Vertex, Vertex> key{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!directed && key.first > key.second)
            std::swap(key.first, key.second);
        if (!seen.insert(key).second)
            throw ParseError(line.number, "duplicate " + item);
        raw.pairs.push_back(key);
    }
    return raw;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    auto raw = parse_raw(text, false);
    return Graph(raw.n, raw.pairs);
}

Digraph parse_digraph(std::string_view text)
{
    auto raw = parse_raw(text, true);
    return Digraph(raw.n, raw.pairs);
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << "graph " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << "edge " << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_digraph(const Digraph& d)
{
    std::ostringstream out;
    out << "digraph " << d.order() << '\n';
    for (auto [u, v] : d.arcs())
        out << "arc " << u << ' ' << v << '\n';
    return out.str();
}

std::string format_set(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace blindtm
