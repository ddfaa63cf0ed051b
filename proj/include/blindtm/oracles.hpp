#pragma once

#include "blindtm/fq_matrix.hpp"
#include "blindtm/graph.hpp"
#include "blindtm/graph_property.hpp"
#include "blindtm/int_set.hpp"
#include "blindtm/problems.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace blindtm {

/// Brute-force answer. Witnesses come in lexicographic order of the sorted
/// sets, at most `max_witnesses` of them; `decision` never depends on the cap.
struct OracleVerdict {
    bool decision = false;
    std::vector<VertexSet> witnesses;
};

inline constexpr int kOracleMaxElements = 25;
inline constexpr std::size_t kOracleMaxSubsets = 10'000'000;
inline constexpr std::size_t kAllWitnesses = std::numeric_limits<std::size_t>::max();

// Direct definition checks.
bool is_sigma_rho_set(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, const VertexSet& d);
bool is_kernel(const Digraph& g, const VertexSet& s);
bool sums_to_zero(const FqMatrix& h, const VertexSet& columns);
bool is_r_regular_set(const Graph& g, int r, const VertexSet& d);

/// All of these throw GuardError beyond 25 elements or 10^7 candidate subsets.
OracleVerdict oracle_sigma_rho(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, CardinalityMode mode,
                               std::size_t max_witnesses = kAllWitnesses);

/// Dual modes decided through the complement S' = V \ D: |S'| <= k (or = k),
/// members of D need deg(v) - |N(v) ∩ S'| in sigma, members of S' in rho.
/// Witnesses are the sets D. Throws std::invalid_argument for standard modes.
OracleVerdict oracle_sigma_rho_by_complement(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho,
                                             CardinalityMode mode, std::size_t max_witnesses = kAllWitnesses);

OracleVerdict oracle_kernel(const Digraph& d, int k, std::size_t max_witnesses = kAllWitnesses);

/// MinDistance: nonempty and at most k columns (dual: nonempty, at least n - k).
/// WeightDistribution: exactly k columns (dual: exactly n - k).
OracleVerdict oracle_code_sum(const FqMatrix& h, int k, CodeMode mode, bool dual,
                              std::size_t max_witnesses = kAllWitnesses);

/// Nonempty sets of at most k vertices inducing an r-regular subgraph.
OracleVerdict oracle_r_regular(const Graph& g, int r, int k, std::size_t max_witnesses = kAllWitnesses);

/// Sets D with |D| <= k whose induced subgraph satisfies p and where every
/// vertex outside D has |N(v) ∩ D| in rho.
OracleVerdict oracle_p_rho(const Graph& g, const GraphProperty& p, const IntSetSpec& rho, int k,
                           std::size_t max_witnesses = kAllWitnesses);

} // namespace blindtm
