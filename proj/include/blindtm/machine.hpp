#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blindtm {

/// Index into BlindMachine::alphabet. 0 is the blank; alphabet.size() is the
/// neutral symbol `_`, which may appear in transitions but never on a tape.
using SymbolId = int;
using StateId = int;

inline constexpr SymbolId kBlank = 0;

/// <reads, from, writes, to, moves>; every tuple has one entry per tape.
/// A neutral read matches any symbol, a neutral write keeps the cell.
struct Transition {
    std::vector<SymbolId> reads;
    StateId from = 0;
    std::vector<SymbolId> writes;
    StateId to = 0;
    std::vector<int> moves;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Blind multi-tape nondeterministic Turing machine. Plain data: any content
/// can be represented, validate_machine() reports what is wrong with it.
struct BlindMachine {
    int tapes = 1;
    std::vector<std::string> alphabet{"B"};
    std::vector<std::string> states;
    StateId initial = 0;
    std::vector<StateId> accepting;
    std::vector<Transition> transitions;

    SymbolId neutral() const noexcept { return static_cast<SymbolId>(alphabet.size()); }
    bool is_accepting(StateId q) const;

    friend bool operator==(const BlindMachine&, const BlindMachine&) = default;
};

/// Incremental construction with name lookup, used by the machine builders.
class MachineBuilder {
public:
    /// The first symbol is the blank.
    MachineBuilder(int tapes, std::vector<std::string> alphabet);

    SymbolId symbol(std::string_view name) const;
    SymbolId neutral() const noexcept { return static_cast<SymbolId>(machine_.alphabet.size()); }

    /// Returns the id of `name`, declaring it on first use.
    StateId state(const std::string& name);
    bool has_state(const std::string& name) const { return state_ids_.count(name) != 0; }

    void set_initial(StateId q) { machine_.initial = q; }
    void add_accepting(StateId q) { machine_.accepting.push_back(q); }
    void add(Transition t) { machine_.transitions.push_back(std::move(t)); }

    int tapes() const noexcept { return machine_.tapes; }
    BlindMachine build() &&;

private:
    BlindMachine machine_;
    std::unordered_map<std::string, StateId> state_ids_;
    std::unordered_map<std::string, SymbolId> symbol_ids_;
};

/// One message per violated invariant; empty iff the machine is well formed.
std::vector<std::string> validate_machine(const BlindMachine& m);

/// Accepting states are merged into a fresh non-accepting q_a, a fresh
/// accepting q_A is added with the blind transitions q_a -> q_a and q_a -> q_A
/// (no moves). Transitions leaving old accepting states are dropped. If the
/// machine accepts within t steps, the result has accepting runs of every
/// length in [t + 1, inf); in particular of exactly k + 2 steps for any k >= t - 1.
BlindMachine normalize_for_exact(const BlindMachine& m);
/// The construction does not depend on k; this form only checks k >= 0.
BlindMachine normalize_for_exact(const BlindMachine& m, int k);

// Machine file:
//   machine
//   tapes <m>
//   alphabet <blank> <s1> ...      (`_` is reserved)
//   states <q0> ...
//   initial <q>
//   accepting <q> ...
//   trans <r1..rm> <from> <w1..wm> <to> <d1..dm>
BlindMachine parse_machine(std::string_view text);
std::string serialize_machine(const BlindMachine& m);

/// Renders a transition in the `trans` line syntax (without the keyword).
std::string format_transition(const BlindMachine& m, const Transition& t);

} // namespace blindtm
