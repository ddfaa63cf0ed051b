#include "blindtm/reductions.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/oracles.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace blindtm {

ReducedInstance reduce_is_to_sss(const Graph& g, int k)
{
    const int n = g.order();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    ReducedInstance r;
    r.k = k;
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int v = 1; v <= n; ++v)
        r.origin.push_back({false, v, {0, 0}});
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        const Vertex x = n + 1 + e;
        r.origin.push_back({true, 0, {u, v}});
        out.emplace_back(u, x);
        out.emplace_back(v, x);
        for (int f = 0; f < e; ++f)
            out.emplace_back(n + 1 + f, x);
    }
    r.g_prime = Graph(n + m, out);
    return r;
}

bool verify_reduction(const Graph& g, int k)
{
    if (g.order() + g.size() > kOracleMaxElements)
        throw GuardError("reduced graph would have " + std::to_string(g.order() + g.size()) + " vertices, limit is " +
                         std::to_string(kOracleMaxElements));
    auto reduced = reduce_is_to_sss(g, k);
    const int bound = std::max({reduced.g_prime.order(), k, 1});
    const auto zero = IntSetSpec::finite({0}, bound);
    auto independent = oracle_sigma_rho(g, zero, IntSetSpec::all(bound), CardinalityMode::exactly(k), 1);
    auto strong = oracle_sigma_rho(reduced.g_prime, zero, IntSetSpec::finite({0, 1}, bound), CardinalityMode::exactly(k), 1);
    return independent.decision == strong.decision;
}

std::string serialize_reduced(const ReducedInstance& r)
{
    std::ostringstream out;
    out << serialize_graph(r.g_prime);
    for (std::size_t i = 0; i < r.origin.size(); ++i) {
        const auto& o = r.origin[i];
        out << "# origin " << i + 1;
        if (o.is_edge)
            out << " edge " << o.edge.first << ' ' << o.edge.second << '\n';
        else
            out << " vertex " << o.vertex << '\n';
    }
    return out.str();
}

} // namespace blindtm
