#pragma once

#include "blindtm/machine.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blindtm {

enum class GateKind : std::uint8_t { Input, Const0, Const1, Not, And, Or };

/// Boolean circuit with gates in topological order (fan-ins have smaller ids)
/// and a single output. Input gates are the wires x[i, j]: step i performs
/// transition j, both 1-based.
class Circuit {
public:
    using GateId = std::uint32_t;

    std::size_t gate_count() const noexcept { return kinds_.size(); }
    GateKind kind(GateId g) const { return kinds_.at(g); }
    std::span<const GateId> fanin(GateId g) const
    {
        return {fanins_.data() + offsets_.at(g), offsets_.at(g + 1) - offsets_.at(g)};
    }
    GateId output() const noexcept { return output_; }

    int steps() const noexcept { return steps_; }
    int transitions() const noexcept { return transitions_; }
    /// Input gates ordered by (step, transition); this is the assignment order.
    const std::vector<GateId>& inputs() const noexcept { return inputs_; }
    /// Gate of x[step, transition].
    GateId input(int step, int transition) const;
    /// Position of an input gate in inputs().
    std::size_t input_index(GateId g) const;
    int input_step(GateId g) const;
    int input_transition(GateId g) const;

private:
    friend class CircuitBuilder;
    std::vector<GateKind> kinds_;
    std::vector<std::size_t> offsets_{0};
    std::vector<GateId> fanins_;
    std::vector<GateId> inputs_;
    std::vector<std::int64_t> input_slot_; // per gate: index into inputs_, -1 otherwise
    GateId output_ = 0;
    int steps_ = 0;
    int transitions_ = 0;
};

/// Appends gates in topological order. The *_of helpers fold constants and
/// collapse trivial fan-ins; add() never rewrites.
class CircuitBuilder {
public:
    using GateId = Circuit::GateId;

    CircuitBuilder() = default;
    /// Creates the steps x transitions input grid as gates 0.. in order.
    CircuitBuilder(int steps, int transitions);

    GateId add_input(int step, int transition);

    GateId input(int step, int transition) const { return circuit_.input(step, transition); }
    GateId constant(bool value);
    GateId add(GateKind kind, std::span<const GateId> fanin);

    GateId not_of(GateId a);
    GateId and_of(std::vector<GateId> fanin);
    GateId or_of(std::vector<GateId> fanin);
    GateId and2(GateId a, GateId b);
    GateId or2(GateId a, GateId b);

    bool is_const(GateId g, bool value) const;
    GateKind kind(GateId g) const { return circuit_.kinds_[g]; }

    /// Throws std::invalid_argument unless the inputs form a full
    /// steps x transitions grid without duplicates.
    Circuit finish(GateId output) &&;

private:
    Circuit circuit_;
    std::optional<GateId> const_[2];
    std::vector<std::int64_t> negation_; // cached Not gate per gate, -1 if none
    struct Label {
        GateId gate;
        int step;
        int transition;
    };
    std::vector<Label> labels_;
};

/// Input assignment indexed like Circuit::inputs().
using Assignment = std::vector<bool>;

/// Throws std::invalid_argument if the assignment size differs from the input count.
bool evaluate(const Circuit& c, const Assignment& assignment);

struct CircuitStats {
    /// Most fan-in >= 3 And/Or gates on an input-to-output path.
    int weft = 0;
    /// Most non-input gates on an input-to-output path.
    int depth = 0;
    std::size_t gate_count = 0;
    std::size_t large_gate_count = 0;
};

CircuitStats analyze(const Circuit& c);

/// Compiles the k-step computations of a machine with exactly one accepting
/// state on `word`: weight-k satisfying assignments are exactly the accepting
/// runs of k steps, x[i, j] true iff step i uses transition j (1-based index
/// into m.transitions). Throws std::invalid_argument for k < 1 or more (or
/// fewer) than one accepting state.
Circuit compile_circuit(const BlindMachine& m, std::span<const SymbolId> word, int k);

/// Assignment with x[i, witness[i-1] + 1] true for each step.
Assignment assignment_from_witness(const Circuit& c, std::span<const std::size_t> witness);
/// The transition sequence (0-based indices) of an assignment with exactly one
/// true input per step, or nothing if it has another shape.
std::optional<std::vector<std::size_t>> witness_from_assignment(const Circuit& c, const Assignment& a);

inline constexpr std::size_t kBruteForceLimit = 10'000'000;

/// First satisfying assignment of the given Hamming weight, in lexicographic
/// order of the true input positions. Throws GuardError if C(inputs, weight)
/// exceeds `limit`.
std::optional<Assignment> weighted_sat_brute(const Circuit& c, int weight, std::size_t limit = kBruteForceLimit);

/// Depth-first search over assignments with exactly one true input per step,
/// pruning as soon as an output conjunct depending only on assigned steps is
/// false. On compiled circuits (which forbid two transitions in one step) this
/// finds a weight-steps() satisfying assignment iff one exists, and the first
/// one in the same order as weighted_sat_brute. Throws GuardError past
/// `node_limit` search nodes.
std::optional<Assignment> weighted_sat_blocks(const Circuit& c, std::size_t node_limit = kBruteForceLimit);

// Circuit file:
//   circuit <inputs>
//   input <id> <step> <trans> | const <id> <0|1> | not <id> <in>
//   and <id> <in>... | or <id> <in>...
//   output <id>
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

} // namespace blindtm
