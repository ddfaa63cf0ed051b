#pragma once

#include "blindtm/machine.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace blindtm {

/// Machine state, head positions and sparse tape contents. Blank cells are
/// never stored, so equal configurations have equal representations.
class Configuration {
public:
    /// `word` on tape 0 from cell 0, every other cell blank, heads at 0.
    static Configuration initial(const BlindMachine& m, std::span<const SymbolId> word = {});

    StateId state() const noexcept { return data_[0]; }
    int tapes() const noexcept { return data_[1]; }
    int head(int tape) const { return data_.at(2 + static_cast<std::size_t>(tape)); }

    SymbolId read(int tape, int pos) const;
    SymbolId under_head(int tape) const { return read(tape, head(tape)); }

    /// Non-blank cells of `tape` as (position, symbol), by position.
    std::vector<std::pair<int, SymbolId>> cells(int tape) const;

    void set_state(StateId q) noexcept { data_[0] = q; }
    void move_head(int tape, int delta) { data_.at(2 + static_cast<std::size_t>(tape)) += delta; }
    /// Writing the blank erases the cell.
    void write(int tape, int pos, SymbolId s);

    std::size_t hash() const noexcept;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t cells_begin() const noexcept { return 2 + static_cast<std::size_t>(data_[1]); }
    std::size_t find_cell(int tape, int pos) const noexcept;

    std::vector<std::int32_t> data_;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept { return c.hash(); }
};

struct RunResult {
    bool accepted = false;
    int steps = 0;
    /// Transition indices (0-based, into BlindMachine::transitions).
    std::vector<std::size_t> witness;
    /// Present iff accepted.
    std::optional<Configuration> final;
};

/// Indices of transitions applicable in `c`, in table order.
std::vector<std::size_t> applicable(const BlindMachine& m, const Configuration& c);

/// Throws std::invalid_argument if transition `t` is not applicable in `c`.
Configuration step(const BlindMachine& m, const Configuration& c, std::size_t t);

/// Replays `witness` from the initial configuration on `word`.
Configuration replay(const BlindMachine& m, std::span<const SymbolId> word, std::span<const std::size_t> witness);

/// Default cap on distinct configurations explored by one search.
inline constexpr std::size_t kDefaultConfigurationLimit = 20'000'000;

/// Breadth-first search for a computation reaching an accepting state within
/// `max_steps` steps. The witness is the first accepting path in BFS order with
/// transitions expanded in table order. Throws std::invalid_argument for a
/// negative budget and GuardError past `limit` configurations.
RunResult search_accepting(const BlindMachine& m, std::span<const SymbolId> word, int max_steps,
                           std::size_t limit = kDefaultConfigurationLimit);

/// Like search_accepting but for runs of exactly `steps` steps; configurations
/// are deduplicated per depth only.
RunResult accepts_in_exactly(const BlindMachine& m, std::span<const SymbolId> word, int steps,
                             std::size_t limit = kDefaultConfigurationLimit);

/// Calls `visit` once per distinct accepting configuration reachable within
/// `max_steps` steps, in BFS order, with the first path found to it. Accepting
/// configurations are not expanded further. Stops early when `visit` returns false.
void enumerate_accepting(const BlindMachine& m, std::span<const SymbolId> word, int max_steps,
                         const std::function<bool(const RunResult&)>& visit,
                         std::size_t limit = kDefaultConfigurationLimit);

} // namespace blindtm
