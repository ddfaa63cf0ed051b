#pragma once

#include "blindtm/fq_matrix.hpp"
#include "blindtm/graph.hpp"
#include "blindtm/graph_property.hpp"
#include "blindtm/int_set.hpp"
#include "blindtm/machine.hpp"
#include "blindtm/problems.hpp"
#include "blindtm/simulator.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace blindtm {

/// Where the chosen set lives in a final configuration.
struct DecodeHints {
    int tape = 0;
    /// element_of[s] is the vertex/column written as symbol s, 0 if s is not one.
    std::vector<int> element_of;
    /// The tape holds the complement of the solution (dual parameterizations).
    bool complement = false;
    /// Number of vertices or columns of the instance.
    int universe = 0;

    friend bool operator==(const DecodeHints&, const DecodeHints&) = default;
};

struct BuiltInstance {
    BlindMachine machine;
    /// An accepting run of at most this many steps exists whenever the
    /// instance is a YES instance.
    int step_bound = 0;
    DecodeHints hints;

    friend bool operator==(const BuiltInstance&, const BuiltInstance&) = default;
};

/// (sigma, rho)-domination in (n+1) tapes: tape 0 holds the chosen set, tape v
/// counts |N(v) ∩ D| against a characteristic vector. For the dual modes the
/// chosen set is the complement of D. Throws std::invalid_argument when a set
/// bound is below k (standard) or below the maximum degree (dual).
BuiltInstance build_sigma_rho(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, CardinalityMode mode);

/// Kernels of size at most k: sigma = {0}, rho = N+, counting out-arcs into D.
BuiltInstance build_digraph_kernel(const Digraph& d, int k);

/// One-tape machine guessing a nonempty set of at most k vertices and checking
/// that it induces an r-regular subgraph.
BuiltInstance build_induced_r_regular(const Graph& g, int r, int k);

/// Column sets of h summing to zero over F_q. With `dual` the parameter counts
/// the excluded columns (n - k chosen).
BuiltInstance build_code_machine(const FqMatrix& h, int k, CodeMode mode, bool dual);

/// The literal set on the hint tape of r.final, from cell 0 to the first blank.
/// Throws std::invalid_argument if the run did not accept.
VertexSet decode_chosen_set(const BuiltInstance& b, const RunResult& r);

/// decode_chosen_set, complemented for dual builds.
VertexSet solution_set(const BuiltInstance& b, const RunResult& r);

struct PRhoDecision {
    bool yes = false;
    VertexSet witness;
};

/// Sets D with |D| <= k whose induced subgraph satisfies p and where every
/// v outside D has |N(v) ∩ D| in rho. Runs the (N, rho) machine and filters
/// the decoded sets of its accepting runs by p.
PRhoDecision decide_p_rho(const Graph& g, const GraphProperty& p, const IntSetSpec& rho, int k,
                          std::size_t limit = kDefaultConfigurationLimit);

/// Machine file with the step bound and decode hints as `#@` comment lines.
std::string serialize_built_instance(const BuiltInstance& b);
/// Reads what serialize_built_instance wrote. A plain machine file parses
/// with step bound 0 and empty hints.
BuiltInstance parse_built_instance(std::string_view text);

} // namespace blindtm
