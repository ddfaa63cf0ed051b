#include "blindtm/instances.hpp"

#include <stdexcept>

namespace blindtm {

Graph random_graph(InstanceRng& rng, int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.coin(2))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Digraph random_digraph(InstanceRng& rng, int n)
{
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v && rng.coin(3))
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

FqMatrix random_matrix(InstanceRng& rng, int q, int rows, int cols)
{
    std::vector<int> entries(static_cast<std::size_t>(rows * cols));
    for (auto& e : entries)
        e = rng.below(q);
    return FqMatrix(q, rows, cols, std::move(entries));
}

std::vector<Graph> all_graphs(int n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    if (pairs.size() > 20)
        throw std::invalid_argument("too many graphs to list");
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i))
                edges.push_back(pairs[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

std::vector<Digraph> all_digraphs(int n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v)
                pairs.emplace_back(u, v);
    if (pairs.size() > 20)
        throw std::invalid_argument("too many digraphs to list");
    std::vector<Digraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i))
                arcs.push_back(pairs[i]);
        out.emplace_back(n, arcs);
    }
    return out;
}

std::vector<NamedSet> standard_sets(int bound)
{
    return {
        {"all", IntSetSpec::all(bound)},
        {"positive", IntSetSpec::positive(bound)},
        {"finite:0", IntSetSpec::finite({0}, bound)},
        {"finite:1", IntSetSpec::finite({1}, bound)},
        {"finite:0,1", IntSetSpec::finite({0, 1}, bound)},
        {"finite:2", IntSetSpec::finite({2}, bound)},
        {"even", IntSetSpec::even(bound)},
        {"odd", IntSetSpec::odd(bound)},
    };
}

std::vector<GraphProperty> standard_properties()
{
    return {GraphProperty::always_true(), GraphProperty::connected(), GraphProperty::clique(),
            GraphProperty::independent(), GraphProperty::regular(1)};
}

} // namespace blindtm
