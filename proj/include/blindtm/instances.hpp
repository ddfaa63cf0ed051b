#pragma once

#include "blindtm/fq_matrix.hpp"
#include "blindtm/graph.hpp"
#include "blindtm/graph_property.hpp"
#include "blindtm/int_set.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace blindtm {

/// Seeded source for instance families. Uses plain modulo reduction so the
/// sequence is identical on every standard library.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [0, n); n must be positive.
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
    bool coin(int one_in) { return below(one_in) == 0; }

private:
    std::mt19937_64 engine_;
};

/// Each of the C(n, 2) edges present with probability 1/2.
Graph random_graph(InstanceRng& rng, int n);
/// Each ordered pair an arc with probability 1/3.
Digraph random_digraph(InstanceRng& rng, int n);
FqMatrix random_matrix(InstanceRng& rng, int q, int rows, int cols);

/// Every labeled graph on n vertices, by edge bitmask.
std::vector<Graph> all_graphs(int n);
/// Every loop-free labeled digraph on n vertices, by arc bitmask.
std::vector<Digraph> all_digraphs(int n);

struct NamedSet {
    std::string name;
    IntSetSpec spec;
};

/// N, N+, {0}, {1}, {0,1}, {2}, EVEN, ODD, decidable up to `bound`.
std::vector<NamedSet> standard_sets(int bound);

/// always-true, connected, clique, independent, regular:1.
std::vector<GraphProperty> standard_properties();

} // namespace blindtm
