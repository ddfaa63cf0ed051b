#pragma once

#include "blindtm/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blindtm {

/// Where a vertex of the reduced graph comes from.
struct Origin {
    bool is_edge = false;
    Vertex vertex = 0;                    // when !is_edge
    std::pair<Vertex, Vertex> edge{0, 0}; // when is_edge, u < v

    friend bool operator==(const Origin&, const Origin&) = default;
};

/// Independent set in g of size k <=> strong stable set in g_prime of size k.
struct ReducedInstance {
    /// Vertices 1..n of g, then one vertex per edge in lexicographic edge
    /// order. Edge-vertices form a clique; each is joined to its two endpoints.
    Graph g_prime;
    int k = 0;
    /// origin[v - 1] for vertex v of g_prime.
    std::vector<Origin> origin;
};

ReducedInstance reduce_is_to_sss(const Graph& g, int k = 0);

/// Decides both sides with the brute-force oracles (independent set:
/// sigma = {0}, rho = N; strong stable set: sigma = {0}, rho = {0, 1}; both
/// of size exactly k) and reports whether the answers agree. Throws
/// GuardError when n + |E| exceeds the oracle limit.
bool verify_reduction(const Graph& g, int k);

/// Graph file of g_prime followed by `# origin` comment lines.
std::string serialize_reduced(const ReducedInstance& r);

} // namespace blindtm
