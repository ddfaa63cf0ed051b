#include "blindtm/builders.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blindtm {

VertexSet decode_chosen_set(const BuiltInstance& b, const RunResult& r)
{
    if (!r.accepted || !r.final)
        throw std::invalid_argument("cannot decode a rejecting run");
    VertexSet out;
    for (int pos = 0;; ++pos) {
        auto s = r.final->read(b.hints.tape, pos);
        if (s == kBlank)
            break;
        auto element = static_cast<std::size_t>(s) < b.hints.element_of.size() ? b.hints.element_of[static_cast<std::size_t>(s)] : 0;
        if (element == 0)
            throw std::invalid_argument("tape " + std::to_string(b.hints.tape) + " holds a non-element symbol at cell " +
                                        std::to_string(pos));
        out.push_back(element);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet solution_set(const BuiltInstance& b, const RunResult& r)
{
    auto chosen = decode_chosen_set(b, r);
    if (!b.hints.complement)
        return chosen;
    VertexSet out;
    for (int v = 1; v <= b.hints.universe; ++v)
        if (!std::binary_search(chosen.begin(), chosen.end(), v))
            out.push_back(v);
    return out;
}

PRhoDecision decide_p_rho(const Graph& g, const GraphProperty& p, const IntSetSpec& rho, int k, std::size_t limit)
{
    auto built = build_sigma_rho(g, IntSetSpec::all(std::max(k, rho.bound())), rho, CardinalityMode::at_most(k));
    PRhoDecision decision;
    enumerate_accepting(
        built.machine, {}, built.step_bound,
        [&](const RunResult& run) {
            auto d = decode_chosen_set(built, run);
            if (!p(g.induced(d)))
                return true;
            decision.yes = true;
            decision.witness = std::move(d);
            return false;
        },
        limit);
    return decision;
}

std::string serialize_built_instance(const BuiltInstance& b)
{
    std::ostringstream out;
    out << "#@ step-bound " << b.step_bound << '\n';
    out << "#@ decode-tape " << b.hints.tape << '\n';
    out << "#@ universe " << b.hints.universe << '\n';
    if (b.hints.complement)
        out << "#@ complement\n";
    for (std::size_t s = 0; s < b.hints.element_of.size(); ++s)
        if (b.hints.element_of[s] != 0)
            out << "#@ element " << b.machine.alphabet[s] << ' ' << b.hints.element_of[s] << '\n';
    out << serialize_machine(b.machine);
    return out.str();
}

BuiltInstance parse_built_instance(std::string_view source)
{
    BuiltInstance b;
    b.machine = parse_machine(source);
    b.hints.element_of.assign(b.machine.alphabet.size(), 0);
    int number = 0;
    for (const auto& raw : text::split(source, '\n')) {
        ++number;
        std::string_view line = raw;
        if (line.substr(0, 2) != "#@")
            continue;
        std::istringstream in{std::string(line.substr(2))};
        std::vector<std::string> tok;
        for (std::string w; in >> w;)
            tok.push_back(w);
        if (tok.empty())
            continue;
        auto need = [&](std::size_t count) {
            if (tok.size() != count)
                throw ParseError(number, "malformed hint '" + std::string(line) + "'");
        };
        if (tok[0] == "step-bound") {
            need(2);
            b.step_bound = static_cast<int>(text::parse_int(tok[1], number, "step bound"));
        } else if (tok[0] == "decode-tape") {
            need(2);
            b.hints.tape = static_cast<int>(text::parse_int(tok[1], number, "tape"));
            if (b.hints.tape < 0 || b.hints.tape >= b.machine.tapes)
                throw ParseError(number, "decode tape out of range");
        } else if (tok[0] == "universe") {
            need(2);
            b.hints.universe = static_cast<int>(text::parse_int(tok[1], number, "universe"));
        } else if (tok[0] == "complement") {
            need(1);
            b.hints.complement = true;
        } else if (tok[0] == "element") {
            need(3);
            auto it = std::find(b.machine.alphabet.begin(), b.machine.alphabet.end(), tok[1]);
            if (it == b.machine.alphabet.end())
                throw ParseError(number, "unknown symbol '" + tok[1] + "'");
            b.hints.element_of[static_cast<std::size_t>(it - b.machine.alphabet.begin())] =
                static_cast<int>(text::parse_int(tok[2], number, "element"));
        } else {
            throw ParseError(number, "unknown hint '" + tok[0] + "'");
        }
    }
    return b;
}

} // namespace blindtm
