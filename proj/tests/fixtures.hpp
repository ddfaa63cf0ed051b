#pragma once

#include "blindtm/graph.hpp"

#include <utility>
#include <vector>

namespace fixtures {

inline blindtm::Graph cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    if (n >= 3)
        edges.emplace_back(1, n);
    return blindtm::Graph(n, edges);
}

inline blindtm::Graph path(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return blindtm::Graph(n, edges);
}

inline blindtm::Graph complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return blindtm::Graph(n, edges);
}

// Centre 1, leaves 2..leaves+1.
inline blindtm::Graph star(int leaves)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= leaves + 1; ++v)
        edges.emplace_back(1, v);
    return blindtm::Graph(leaves + 1, edges);
}

inline blindtm::Graph empty(int n)
{
    return blindtm::Graph(n, {});
}

} // namespace fixtures
