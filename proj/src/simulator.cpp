#include "blindtm/simulator.hpp"

#include "blindtm/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace blindtm {

Configuration Configuration::initial(const BlindMachine& m, std::span<const SymbolId> word)
{
    Configuration c;
    c.data_.assign(2 + static_cast<std::size_t>(m.tapes), 0);
    c.data_[0] = m.initial;
    c.data_[1] = m.tapes;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] >= m.neutral())
            throw std::invalid_argument("input word contains a symbol outside the alphabet");
        c.write(0, static_cast<int>(i), word[i]);
    }
    return c;
}

std::size_t Configuration::find_cell(int tape, int pos) const noexcept
{
    // Lower bound over the (tape, pos, symbol) triples.
    std::size_t lo = 0;
    std::size_t hi = (data_.size() - cells_begin()) / 3;
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        auto at = cells_begin() + 3 * mid;
        if (data_[at] < tape || (data_[at] == tape && data_[at + 1] < pos))
            lo = mid + 1;
        else
            hi = mid;
    }
    return cells_begin() + 3 * lo;
}

SymbolId Configuration::read(int tape, int pos) const
{
    auto at = find_cell(tape, pos);
    if (at < data_.size() && data_[at] == tape && data_[at + 1] == pos)
        return data_[at + 2];
    return kBlank;
}

std::vector<std::pair<int, SymbolId>> Configuration::cells(int tape) const
{
    std::vector<std::pair<int, SymbolId>> out;
    for (auto at = find_cell(tape, std::numeric_limits<int>::min()); at < data_.size() && data_[at] == tape; at += 3)
        out.emplace_back(data_[at + 1], data_[at + 2]);
    return out;
}

void Configuration::write(int tape, int pos, SymbolId s)
{
    auto at = find_cell(tape, pos);
    bool present = at < data_.size() && data_[at] == tape && data_[at + 1] == pos;
    auto offset = static_cast<std::ptrdiff_t>(at);
    if (s == kBlank) {
        if (present)
            data_.erase(data_.begin() + offset, data_.begin() + offset + 3);
    } else if (present) {
        data_[at + 2] = s;
    } else {
        const std::int32_t cell[3] = {tape, pos, s};
        data_.insert(data_.begin() + offset, std::begin(cell), std::end(cell));
    }
}

std::size_t Configuration::hash() const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : data_) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

namespace {

// Transition table reduced to the non-neutral parts, indexed by source state.
struct CompiledMachine {
    struct Op {
        std::vector<std::pair<int, SymbolId>> reads;
        std::vector<std::pair<int, SymbolId>> writes;
        std::vector<std::pair<int, int>> moves;
        StateId to = 0;
    };

    explicit CompiledMachine(const BlindMachine& m)
        : by_state(m.states.size()), accepting(m.states.size(), 0)
    {
        auto diagnostics = validate_machine(m);
        if (!diagnostics.empty())
            throw std::invalid_argument("malformed machine: " + diagnostics.front());
        for (auto q : m.accepting)
            accepting[static_cast<std::size_t>(q)] = 1;
        ops.reserve(m.transitions.size());
        for (std::size_t i = 0; i < m.transitions.size(); ++i) {
            const auto& t = m.transitions[i];
            Op op;
            for (int tape = 0; tape < m.tapes; ++tape) {
                auto k = static_cast<std::size_t>(tape);
                if (t.reads[k] != m.neutral())
                    op.reads.emplace_back(tape, t.reads[k]);
                if (t.writes[k] != m.neutral())
                    op.writes.emplace_back(tape, t.writes[k]);
                if (t.moves[k] != 0)
                    op.moves.emplace_back(tape, t.moves[k]);
            }
            op.to = t.to;
            ops.push_back(std::move(op));
            by_state[static_cast<std::size_t>(t.from)].push_back(i);
        }
    }

    bool matches(std::size_t t, const Configuration& c) const
    {
        for (auto [tape, s] : ops[t].reads)
            if (c.under_head(tape) != s)
                return false;
        return true;
    }

    Configuration apply(std::size_t t, const Configuration& c) const
    {
        const auto& op = ops[t];
        Configuration next = c;
        for (auto [tape, s] : op.writes)
            next.write(tape, next.head(tape), s);
        for (auto [tape, d] : op.moves)
            next.move_head(tape, d);
        next.set_state(op.to);
        return next;
    }

    bool is_accepting(const Configuration& c) const { return accepting[static_cast<std::size_t>(c.state())] != 0; }

    std::vector<std::vector<std::size_t>> by_state;
    std::vector<Op> ops;
    std::vector<char> accepting;
};

struct PathNode {
    std::int64_t parent;
    std::size_t transition;
};

std::vector<std::size_t> path_to(const std::vector<PathNode>& nodes, std::int64_t at)
{
    std::vector<std::size_t> witness;
    while (at > 0) {
        witness.push_back(nodes[static_cast<std::size_t>(at)].transition);
        at = nodes[static_cast<std::size_t>(at)].parent;
    }
    std::reverse(witness.begin(), witness.end());
    return witness;
}

enum class Budget { AtMost, Exactly };

// Layered BFS. `visit` receives accepting runs and returns whether to go on.
void explore(const BlindMachine& m, std::span<const SymbolId> word, int max_steps, Budget budget,
             std::size_t limit, const std::function<bool(const RunResult&)>& visit)
{
    if (max_steps < 0)
        throw std::invalid_argument("step budget must be nonnegative");
    CompiledMachine cm(m);

    using Seen = std::unordered_set<Configuration, ConfigurationHash>;
    std::vector<PathNode> nodes{{-1, 0}};
    Seen seen;
    std::size_t stored = 1;

    auto report = [&](const Configuration& c, std::int64_t node, int depth) {
        RunResult r;
        r.accepted = true;
        r.steps = depth;
        r.witness = path_to(nodes, node);
        r.final = c;
        return visit(r);
    };

    auto start = Configuration::initial(m, word);
    std::vector<std::pair<const Configuration*, std::int64_t>> frontier;
    auto first = seen.insert(start).first;
    if (budget == Budget::AtMost && cm.is_accepting(start)) {
        report(start, 0, 0);
        return;
    }
    if (budget == Budget::Exactly && max_steps == 0) {
        if (cm.is_accepting(start))
            report(start, 0, 0);
        return;
    }
    frontier.emplace_back(&*first, 0);

    Seen layer;
    for (int depth = 1; depth <= max_steps && !frontier.empty(); ++depth) {
        Seen& target = budget == Budget::Exactly ? layer : seen;
        if (budget == Budget::Exactly)
            layer = Seen{};
        std::vector<std::pair<const Configuration*, std::int64_t>> next;
        for (auto [config, node] : frontier) {
            for (auto t : cm.by_state[static_cast<std::size_t>(config->state())]) {
                if (!cm.matches(t, *config))
                    continue;
                auto child = cm.apply(t, *config);
                auto [it, inserted] = target.insert(std::move(child));
                if (!inserted)
                    continue;
                if (++stored > limit)
                    throw GuardError("configuration limit of " + std::to_string(limit) + " exceeded");
                auto id = static_cast<std::int64_t>(nodes.size());
                nodes.push_back({node, t});
                bool accepting = cm.is_accepting(*it);
                if (budget == Budget::AtMost && accepting) {
                    if (!report(*it, id, depth))
                        return;
                    continue;
                }
                if (budget == Budget::Exactly && depth == max_steps) {
                    if (accepting && !report(*it, id, depth))
                        return;
                    continue;
                }
                next.emplace_back(&*it, id);
            }
        }
        if (budget == Budget::Exactly)
            seen.swap(layer); // keep the configurations `next` points into alive
        frontier = std::move(next);
    }
}

} // namespace

std::vector<std::size_t> applicable(const BlindMachine& m, const Configuration& c)
{
    std::vector<std::size_t> out;
    const auto neutral = m.neutral();
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        if (t.from != c.state())
            continue;
        bool ok = true;
        for (int tape = 0; tape < m.tapes && ok; ++tape) {
            auto r = t.reads[static_cast<std::size_t>(tape)];
            ok = r == neutral || r == c.under_head(tape);
        }
        if (ok)
            out.push_back(i);
    }
    return out;
}

Configuration step(const BlindMachine& m, const Configuration& c, std::size_t t)
{
    auto ok = applicable(m, c);
    if (std::find(ok.begin(), ok.end(), t) == ok.end())
        throw std::invalid_argument("transition " + std::to_string(t) + " is not applicable");
    const auto& tr = m.transitions[t];
    Configuration next = c;
    for (int tape = 0; tape < m.tapes; ++tape) {
        auto w = tr.writes[static_cast<std::size_t>(tape)];
        if (w != m.neutral())
            next.write(tape, next.head(tape), w);
    }
    for (int tape = 0; tape < m.tapes; ++tape)
        next.move_head(tape, tr.moves[static_cast<std::size_t>(tape)]);
    next.set_state(tr.to);
    return next;
}

Configuration replay(const BlindMachine& m, std::span<const SymbolId> word, std::span<const std::size_t> witness)
{
    auto c = Configuration::initial(m, word);
    for (auto t : witness)
        c = step(m, c, t);
    return c;
}

RunResult search_accepting(const BlindMachine& m, std::span<const SymbolId> word, int max_steps, std::size_t limit)
{
    RunResult result;
    explore(m, word, max_steps, Budget::AtMost, limit, [&](const RunResult& r) {
        result = r;
        return false;
    });
    return result;
}

RunResult accepts_in_exactly(const BlindMachine& m, std::span<const SymbolId> word, int steps, std::size_t limit)
{
    RunResult result;
    explore(m, word, steps, Budget::Exactly, limit, [&](const RunResult& r) {
        result = r;
        return false;
    });
    return result;
}

void enumerate_accepting(const BlindMachine& m, std::span<const SymbolId> word, int max_steps,
                         const std::function<bool(const RunResult&)>& visit, std::size_t limit)
{
    explore(m, word, max_steps, Budget::AtMost, limit, visit);
}

} // namespace blindtm
