#include "blindtm/circuit.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blindtm {

Circuit::GateId Circuit::input(int step, int transition) const
{
    if (step < 1 || step > steps_ || transition < 1 || transition > transitions_)
        throw std::out_of_range("no input x[" + std::to_string(step) + ", " + std::to_string(transition) + "]");
    return inputs_[static_cast<std::size_t>((step - 1) * transitions_ + (transition - 1))];
}

std::size_t Circuit::input_index(GateId g) const
{
    auto slot = input_slot_.at(g);
    if (slot < 0)
        throw std::invalid_argument("gate " + std::to_string(g) + " is not an input");
    return static_cast<std::size_t>(slot);
}

int Circuit::input_step(GateId g) const
{
    return static_cast<int>(input_index(g)) / std::max(transitions_, 1) + 1;
}

int Circuit::input_transition(GateId g) const
{
    return static_cast<int>(input_index(g)) % std::max(transitions_, 1) + 1;
}

CircuitBuilder::CircuitBuilder(int steps, int transitions)
{
    if (steps < 0 || transitions < 0)
        throw std::invalid_argument("negative input grid");
    for (int i = 1; i <= steps; ++i)
        for (int j = 1; j <= transitions; ++j)
            add_input(i, j);
    circuit_.steps_ = steps;
    circuit_.transitions_ = transitions;
    for (const auto& l : labels_)
        circuit_.inputs_.push_back(l.gate);
}

CircuitBuilder::GateId CircuitBuilder::add_input(int step, int transition)
{
    if (step < 1 || transition < 1)
        throw std::invalid_argument("input labels are 1-based");
    auto g = add(GateKind::Input, {});
    labels_.push_back({g, step, transition});
    return g;
}

CircuitBuilder::GateId CircuitBuilder::add(GateKind kind, std::span<const GateId> fanin)
{
    const auto id = static_cast<GateId>(circuit_.kinds_.size());
    for (auto f : fanin)
        if (f >= id)
            throw std::invalid_argument("gate " + std::to_string(id) + " refers to a later gate");
    const bool leaf = kind == GateKind::Input || kind == GateKind::Const0 || kind == GateKind::Const1;
    if (leaf && !fanin.empty())
        throw std::invalid_argument("inputs and constants take no fan-in");
    if (kind == GateKind::Not && fanin.size() != 1)
        throw std::invalid_argument("a Not gate has exactly one input");
    circuit_.kinds_.push_back(kind);
    circuit_.fanins_.insert(circuit_.fanins_.end(), fanin.begin(), fanin.end());
    circuit_.offsets_.push_back(circuit_.fanins_.size());
    negation_.push_back(-1);
    if (kind == GateKind::Const0 && !const_[0])
        const_[0] = id;
    if (kind == GateKind::Const1 && !const_[1])
        const_[1] = id;
    return id;
}

CircuitBuilder::GateId CircuitBuilder::constant(bool value)
{
    auto& slot = const_[value ? 1 : 0];
    if (!slot)
        add(value ? GateKind::Const1 : GateKind::Const0, {});
    return *slot;
}

bool CircuitBuilder::is_const(GateId g, bool value) const
{
    return circuit_.kinds_[g] == (value ? GateKind::Const1 : GateKind::Const0);
}

CircuitBuilder::GateId CircuitBuilder::not_of(GateId a)
{
    if (is_const(a, false))
        return constant(true);
    if (is_const(a, true))
        return constant(false);
    if (negation_[a] >= 0)
        return static_cast<GateId>(negation_[a]);
    const GateId in[1] = {a};
    auto g = add(GateKind::Not, in);
    negation_[a] = g;
    return g;
}

CircuitBuilder::GateId CircuitBuilder::and_of(std::vector<GateId> fanin)
{
    std::erase_if(fanin, [&](GateId g) { return is_const(g, true); });
    if (std::any_of(fanin.begin(), fanin.end(), [&](GateId g) { return is_const(g, false); }))
        return constant(false);
    if (fanin.empty())
        return constant(true);
    if (fanin.size() == 1)
        return fanin.front();
    return add(GateKind::And, fanin);
}

CircuitBuilder::GateId CircuitBuilder::or_of(std::vector<GateId> fanin)
{
    std::erase_if(fanin, [&](GateId g) { return is_const(g, false); });
    if (std::any_of(fanin.begin(), fanin.end(), [&](GateId g) { return is_const(g, true); }))
        return constant(true);
    if (fanin.empty())
        return constant(false);
    if (fanin.size() == 1)
        return fanin.front();
    return add(GateKind::Or, fanin);
}

CircuitBuilder::GateId CircuitBuilder::and2(GateId a, GateId b)
{
    if (is_const(a, false) || is_const(b, false))
        return constant(false);
    if (is_const(a, true))
        return b;
    if (is_const(b, true))
        return a;
    const GateId in[2] = {a, b};
    return add(GateKind::And, in);
}

CircuitBuilder::GateId CircuitBuilder::or2(GateId a, GateId b)
{
    if (is_const(a, true) || is_const(b, true))
        return constant(true);
    if (is_const(a, false))
        return b;
    if (is_const(b, false))
        return a;
    const GateId in[2] = {a, b};
    return add(GateKind::Or, in);
}

Circuit CircuitBuilder::finish(GateId output) &&
{
    if (output >= circuit_.kinds_.size())
        throw std::invalid_argument("output gate does not exist");
    auto& c = circuit_;
    c.output_ = output;
    int steps = 0, transitions = 0;
    for (const auto& l : labels_) {
        steps = std::max(steps, l.step);
        transitions = std::max(transitions, l.transition);
    }
    if (static_cast<std::size_t>(steps) * static_cast<std::size_t>(transitions) != labels_.size())
        throw std::invalid_argument("inputs do not form a full step x transition grid");
    if (!labels_.empty()) {
        c.steps_ = steps;
        c.transitions_ = transitions;
    }
    c.inputs_.assign(labels_.size(), 0);
    std::vector<bool> seen(labels_.size(), false);
    c.input_slot_.assign(c.kinds_.size(), -1);
    for (const auto& l : labels_) {
        auto slot = static_cast<std::size_t>((l.step - 1) * transitions + (l.transition - 1));
        if (seen[slot])
            throw std::invalid_argument("duplicate input x[" + std::to_string(l.step) + ", " +
                                        std::to_string(l.transition) + "]");
        seen[slot] = true;
        c.inputs_[slot] = l.gate;
        c.input_slot_[l.gate] = static_cast<std::int64_t>(slot);
    }
    return std::move(c);
}

bool evaluate(const Circuit& c, const Assignment& assignment)
{
    if (assignment.size() != c.inputs().size())
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values for " +
                                    std::to_string(c.inputs().size()) + " inputs");
    std::vector<char> value(c.gate_count(), 0);
    for (Circuit::GateId g = 0; g < c.gate_count(); ++g) {
        auto in = c.fanin(g);
        switch (c.kind(g)) {
        case GateKind::Input: value[g] = assignment[c.input_index(g)]; break;
        case GateKind::Const0: value[g] = 0; break;
        case GateKind::Const1: value[g] = 1; break;
        case GateKind::Not: value[g] = !value[in[0]]; break;
        case GateKind::And:
            value[g] = std::all_of(in.begin(), in.end(), [&](auto f) { return value[f] != 0; });
            break;
        case GateKind::Or:
            value[g] = std::any_of(in.begin(), in.end(), [&](auto f) { return value[f] != 0; });
            break;
        }
    }
    return value[c.output()] != 0;
}

CircuitStats analyze(const Circuit& c)
{
    CircuitStats stats;
    stats.gate_count = c.gate_count();
    // Longest input-rooted path to each gate; -1 when no input reaches it.
    std::vector<int> weft(c.gate_count(), -1), depth(c.gate_count(), -1);
    for (Circuit::GateId g = 0; g < c.gate_count(); ++g) {
        const auto kind = c.kind(g);
        const auto in = c.fanin(g);
        const bool large = (kind == GateKind::And || kind == GateKind::Or) && in.size() >= 3;
        if (large)
            ++stats.large_gate_count;
        if (kind == GateKind::Input) {
            weft[g] = depth[g] = 0;
            continue;
        }
        for (auto f : in) {
            if (depth[f] < 0)
                continue;
            weft[g] = std::max(weft[g], weft[f] + (large ? 1 : 0));
            depth[g] = std::max(depth[g], depth[f] + 1);
        }
    }
    if (c.gate_count() > 0) {
        stats.weft = std::max(weft[c.output()], 0);
        stats.depth = std::max(depth[c.output()], 0);
    }
    return stats;
}

Assignment assignment_from_witness(const Circuit& c, std::span<const std::size_t> witness)
{
    if (witness.size() != static_cast<std::size_t>(c.steps()))
        throw std::invalid_argument("witness length differs from the circuit's step count");
    Assignment a(c.inputs().size(), false);
    for (std::size_t i = 0; i < witness.size(); ++i)
        a[c.input_index(c.input(static_cast<int>(i) + 1, static_cast<int>(witness[i]) + 1))] = true;
    return a;
}

std::optional<std::vector<std::size_t>> witness_from_assignment(const Circuit& c, const Assignment& a)
{
    if (a.size() != c.inputs().size())
        return std::nullopt;
    std::vector<std::size_t> witness;
    for (int i = 1; i <= c.steps(); ++i) {
        std::optional<std::size_t> chosen;
        for (int j = 1; j <= c.transitions(); ++j) {
            if (!a[c.input_index(c.input(i, j))])
                continue;
            if (chosen)
                return std::nullopt;
            chosen = static_cast<std::size_t>(j - 1);
        }
        if (!chosen)
            return std::nullopt;
        witness.push_back(*chosen);
    }
    return witness;
}

Circuit parse_circuit(std::string_view source)
{
    auto lines = text::tokenize(source);
    if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "circuit")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected 'circuit <inputs>' header");
    const auto declared = text::parse_int(lines.front().tokens[1], lines.front().number, "input count");

    CircuitBuilder b;
    std::optional<Circuit::GateId> output;
    Circuit::GateId next = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tok = lines[i].tokens;
        const int n = lines[i].number;
        const auto& key = tok[0];
        if (key == "output") {
            if (tok.size() != 2 || output)
                throw ParseError(n, "expected a single 'output <id>'");
            auto id = text::parse_int(tok[1], n, "gate id");
            if (id < 0 || id >= next)
                throw ParseError(n, "output refers to an undefined gate");
            output = static_cast<Circuit::GateId>(id);
            continue;
        }
        if (tok.size() < 2)
            throw ParseError(n, "missing gate id");
        auto id = text::parse_int(tok[1], n, "gate id");
        if (id != next)
            throw ParseError(n, "gate ids must be consecutive from 0, expected " + std::to_string(next));
        std::vector<Circuit::GateId> fanin;
        auto operands = [&](std::size_t from) {
            for (std::size_t t = from; t < tok.size(); ++t) {
                auto f = text::parse_int(tok[t], n, "gate id");
                if (f < 0 || f >= id)
                    throw ParseError(n, "gate " + tok[t] + " is not defined before gate " + tok[1]);
                fanin.push_back(static_cast<Circuit::GateId>(f));
            }
        };
        try {
            if (key == "input") {
                if (tok.size() != 4)
                    throw ParseError(n, "expected 'input <id> <step> <trans>'");
                b.add_input(static_cast<int>(text::parse_int(tok[2], n, "step")),
                            static_cast<int>(text::parse_int(tok[3], n, "transition")));
            } else if (key == "const") {
                if (tok.size() != 3 || (tok[2] != "0" && tok[2] != "1"))
                    throw ParseError(n, "expected 'const <id> <0|1>'");
                b.add(tok[2] == "1" ? GateKind::Const1 : GateKind::Const0, {});
            } else if (key == "not") {
                if (tok.size() != 3)
                    throw ParseError(n, "expected 'not <id> <in>'");
                operands(2);
                b.add(GateKind::Not, fanin);
            } else if (key == "and" || key == "or") {
                operands(2);
                b.add(key == "and" ? GateKind::And : GateKind::Or, fanin);
            } else {
                throw ParseError(n, "unknown gate kind '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(n, e.what());
        }
        ++next;
    }
    if (!output)
        throw ParseError(0, "missing 'output' line");
    try {
        auto c = std::move(b).finish(*output);
        if (static_cast<long long>(c.inputs().size()) != declared)
            throw ParseError(lines.front().number, "header declares " + std::to_string(declared) + " inputs, found " +
                                                       std::to_string(c.inputs().size()));
        return c;
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_circuit(const Circuit& c)
{
    std::ostringstream out;
    out << "circuit " << c.inputs().size() << '\n';
    for (Circuit::GateId g = 0; g < c.gate_count(); ++g) {
        switch (c.kind(g)) {
        case GateKind::Input: out << "input " << g << ' ' << c.input_step(g) << ' ' << c.input_transition(g); break;
        case GateKind::Const0: out << "const " << g << " 0"; break;
        case GateKind::Const1: out << "const " << g << " 1"; break;
        case GateKind::Not: out << "not " << g; break;
        case GateKind::And: out << "and " << g; break;
        case GateKind::Or: out << "or " << g; break;
        }
        if (c.kind(g) == GateKind::Not || c.kind(g) == GateKind::And || c.kind(g) == GateKind::Or)
            for (auto f : c.fanin(g))
                out << ' ' << f;
        out << '\n';
    }
    out << "output " << c.output() << '\n';
    return out.str();
}

} // namespace blindtm
