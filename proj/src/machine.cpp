#include "blindtm/machine.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blindtm {

bool BlindMachine::is_accepting(StateId q) const
{
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

MachineBuilder::MachineBuilder(int tapes, std::vector<std::string> alphabet)
{
    if (tapes < 1)
        throw std::invalid_argument("a machine needs at least one tape");
    if (alphabet.empty())
        throw std::invalid_argument("alphabet must contain the blank");
    machine_.tapes = tapes;
    machine_.alphabet = std::move(alphabet);
    for (std::size_t i = 0; i < machine_.alphabet.size(); ++i)
        if (!symbol_ids_.emplace(machine_.alphabet[i], static_cast<SymbolId>(i)).second)
            throw std::invalid_argument("duplicate symbol " + machine_.alphabet[i]);
}

SymbolId MachineBuilder::symbol(std::string_view name) const
{
    if (name == "_")
        return neutral();
    auto it = symbol_ids_.find(std::string(name));
    if (it == symbol_ids_.end())
        throw std::invalid_argument("unknown symbol " + std::string(name));
    return it->second;
}

StateId MachineBuilder::state(const std::string& name)
{
    auto [it, inserted] = state_ids_.emplace(name, static_cast<StateId>(machine_.states.size()));
    if (inserted)
        machine_.states.push_back(name);
    return it->second;
}

BlindMachine MachineBuilder::build() &&
{
    return std::move(machine_);
}

std::vector<std::string> validate_machine(const BlindMachine& m)
{
    std::vector<std::string> diagnostics;
    const auto tapes = static_cast<std::size_t>(std::max(m.tapes, 0));
    const auto state_count = static_cast<StateId>(m.states.size());
    const auto neutral = m.neutral();

    if (m.tapes < 1)
        diagnostics.push_back("tape count must be at least 1");
    if (m.alphabet.empty())
        diagnostics.push_back("alphabet must contain the blank symbol");
    {
        std::set<std::string> names;
        for (const auto& s : m.alphabet) {
            if (s == "_")
                diagnostics.push_back("neutral symbol `_` declared in the alphabet");
            else if (!names.insert(s).second)
                diagnostics.push_back("duplicate symbol " + s);
        }
    }
    {
        std::set<std::string> names;
        for (const auto& q : m.states)
            if (!names.insert(q).second)
                diagnostics.push_back("duplicate state " + q);
    }
    if (m.initial < 0 || m.initial >= state_count)
        diagnostics.push_back("initial state is not declared");
    for (auto q : m.accepting)
        if (q < 0 || q >= state_count)
            diagnostics.push_back("accepting state " + std::to_string(q) + " is not declared");

    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        const auto where = "transition " + std::to_string(i) + ": ";
        if (t.reads.size() != tapes || t.writes.size() != tapes || t.moves.size() != tapes) {
            diagnostics.push_back(where + "tuple arity does not match tape count " + std::to_string(m.tapes));
            continue;
        }
        if (t.from < 0 || t.from >= state_count || t.to < 0 || t.to >= state_count)
            diagnostics.push_back(where + "references an undeclared state");
        bool bad_symbol = false;
        for (std::size_t tape = 0; tape < tapes; ++tape)
            if (t.reads[tape] < 0 || t.reads[tape] > neutral || t.writes[tape] < 0 || t.writes[tape] > neutral)
                bad_symbol = true;
        if (bad_symbol)
            diagnostics.push_back(where + "references an undeclared symbol");
        for (int d : t.moves)
            if (d < -1 || d > 1) {
                diagnostics.push_back(where + "head move outside {-1, 0, 1}");
                break;
            }
    }
    return diagnostics;
}

namespace {

std::string fresh_name(const BlindMachine& m, const std::string& base)
{
    std::string name = base;
    for (int suffix = 1; std::find(m.states.begin(), m.states.end(), name) != m.states.end(); ++suffix)
        name = base + "_" + std::to_string(suffix);
    return name;
}

} // namespace

BlindMachine normalize_for_exact(const BlindMachine& m)
{
    BlindMachine out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;

    std::vector<StateId> remap(m.states.size(), -1);
    for (std::size_t q = 0; q < m.states.size(); ++q)
        if (!m.is_accepting(static_cast<StateId>(q))) {
            remap[q] = static_cast<StateId>(out.states.size());
            out.states.push_back(m.states[q]);
        }
    const auto merged = static_cast<StateId>(out.states.size());
    out.states.push_back(fresh_name(m, "q_a"));
    const auto accept = static_cast<StateId>(out.states.size());
    out.states.push_back(fresh_name(m, "q_A"));
    for (auto& q : remap)
        if (q < 0)
            q = merged;

    out.initial = remap.at(static_cast<std::size_t>(m.initial));
    out.accepting = {accept};

    for (const auto& t : m.transitions) {
        if (m.is_accepting(t.from))
            continue;
        auto copy = t;
        copy.from = remap.at(static_cast<std::size_t>(t.from));
        copy.to = remap.at(static_cast<std::size_t>(t.to));
        out.transitions.push_back(std::move(copy));
    }

    const auto tapes = static_cast<std::size_t>(m.tapes);
    std::vector<SymbolId> blind(tapes, out.neutral());
    std::vector<int> stay(tapes, 0);
    out.transitions.push_back({blind, merged, blind, merged, stay});
    out.transitions.push_back({blind, merged, blind, accept, stay});
    return out;
}

namespace {

SymbolId lookup_symbol(const BlindMachine& m, const std::string& name, int line)
{
    if (name == "_")
        return m.neutral();
    auto it = std::find(m.alphabet.begin(), m.alphabet.end(), name);
    if (it == m.alphabet.end())
        throw ParseError(line, "unknown symbol '" + name + "'");
    return static_cast<SymbolId>(it - m.alphabet.begin());
}

StateId lookup_state(const BlindMachine& m, const std::string& name, int line)
{
    auto it = std::find(m.states.begin(), m.states.end(), name);
    if (it == m.states.end())
        throw ParseError(line, "unknown state '" + name + "'");
    return static_cast<StateId>(it - m.states.begin());
}

} // namespace

BlindMachine parse_machine(std::string_view source)
{
    auto lines = text::tokenize(source);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"machine"})
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected 'machine' header");

    BlindMachine m;
    m.alphabet.clear();
    bool seen_tapes = false, seen_alphabet = false, seen_states = false, seen_initial = false;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& tok = line.tokens;
        const auto& key = tok[0];
        if (key == "tapes") {
            if (tok.size() != 2)
                throw ParseError(line.number, "expected 'tapes <m>'");
            auto t = text::parse_int(tok[1], line.number, "tape count");
            if (t < 1 || t > 100'000)
                throw ParseError(line.number, "tape count out of range");
            m.tapes = static_cast<int>(t);
            seen_tapes = true;
        } else if (key == "alphabet") {
            if (tok.size() < 2)
                throw ParseError(line.number, "alphabet needs at least the blank symbol");
            for (std::size_t s = 1; s < tok.size(); ++s) {
                if (tok[s] == "_")
                    throw ParseError(line.number, "`_` is reserved for the neutral symbol");
                if (std::find(m.alphabet.begin(), m.alphabet.end(), tok[s]) != m.alphabet.end())
                    throw ParseError(line.number, "duplicate symbol '" + tok[s] + "'");
                m.alphabet.push_back(tok[s]);
            }
            seen_alphabet = true;
        } else if (key == "states") {
            for (std::size_t s = 1; s < tok.size(); ++s) {
                if (std::find(m.states.begin(), m.states.end(), tok[s]) != m.states.end())
                    throw ParseError(line.number, "duplicate state '" + tok[s] + "'");
                m.states.push_back(tok[s]);
            }
            seen_states = true;
        } else if (key == "initial") {
            if (!seen_states || tok.size() != 2)
                throw ParseError(line.number, "expected 'initial <q>' after 'states'");
            m.initial = lookup_state(m, tok[1], line.number);
            seen_initial = true;
        } else if (key == "accepting") {
            if (!seen_states)
                throw ParseError(line.number, "'accepting' before 'states'");
            for (std::size_t s = 1; s < tok.size(); ++s)
                m.accepting.push_back(lookup_state(m, tok[s], line.number));
        } else if (key == "trans") {
            if (!seen_tapes || !seen_alphabet || !seen_states)
                throw ParseError(line.number, "'trans' before tapes/alphabet/states");
            const auto tapes = static_cast<std::size_t>(m.tapes);
            if (tok.size() != 1 + 3 * tapes + 2)
                throw ParseError(line.number, "transition needs " + std::to_string(3 * tapes + 2) + " fields");
            Transition t;
            std::size_t p = 1;
            for (std::size_t k = 0; k < tapes; ++k)
                t.reads.push_back(lookup_symbol(m, tok[p++], line.number));
            t.from = lookup_state(m, tok[p++], line.number);
            for (std::size_t k = 0; k < tapes; ++k)
                t.writes.push_back(lookup_symbol(m, tok[p++], line.number));
            t.to = lookup_state(m, tok[p++], line.number);
            for (std::size_t k = 0; k < tapes; ++k) {
                auto d = text::parse_int(tok[p++], line.number, "head move");
                if (d < -1 || d > 1)
                    throw ParseError(line.number, "head move must be -1, 0 or 1");
                t.moves.push_back(static_cast<int>(d));
            }
            m.transitions.push_back(std::move(t));
        } else {
            throw ParseError(line.number, "unknown directive '" + key + "'");
        }
    }
    if (!seen_tapes || !seen_alphabet || !seen_states || !seen_initial)
        throw ParseError(0, "machine file must declare tapes, alphabet, states and initial");
    return m;
}

BlindMachine normalize_for_exact(const BlindMachine& m, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    return normalize_for_exact(m);
}

std::string format_transition(const BlindMachine& m, const Transition& t)
{
    auto sym = [&](SymbolId s) -> std::string {
        if (s == m.neutral())
            return "_";
        if (s >= 0 && s < m.neutral())
            return m.alphabet[static_cast<std::size_t>(s)];
        return "?" + std::to_string(s);
    };
    auto state = [&](StateId q) -> std::string {
        if (q >= 0 && q < static_cast<StateId>(m.states.size()))
            return m.states[static_cast<std::size_t>(q)];
        return "?" + std::to_string(q);
    };
    std::ostringstream out;
    for (auto s : t.reads)
        out << sym(s) << ' ';
    out << state(t.from);
    for (auto s : t.writes)
        out << ' ' << sym(s);
    out << ' ' << state(t.to);
    for (auto d : t.moves)
        out << ' ' << d;
    return out.str();
}

std::string serialize_machine(const BlindMachine& m)
{
    std::ostringstream out;
    out << "machine\n";
    out << "tapes " << m.tapes << '\n';
    out << "alphabet";
    for (const auto& s : m.alphabet)
        out << ' ' << s;
    out << "\nstates";
    for (const auto& q : m.states)
        out << ' ' << q;
    out << "\ninitial " << m.states.at(static_cast<std::size_t>(m.initial)) << '\n';
    out << "accepting";
    for (auto q : m.accepting)
        out << ' ' << m.states.at(static_cast<std::size_t>(q));
    out << '\n';
    for (const auto& t : m.transitions)
        out << "trans " << format_transition(m, t) << '\n';
    return out.str();
}

} // namespace blindtm
