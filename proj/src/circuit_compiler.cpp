#include "blindtm/circuit.hpp"

#include <stdexcept>
#include <string>

namespace blindtm {

Circuit compile_circuit(const BlindMachine& m, std::span<const SymbolId> word, int k)
{
    if (k < 1)
        throw std::invalid_argument("the step count must be at least 1");
    auto diagnostics = validate_machine(m);
    if (!diagnostics.empty())
        throw std::invalid_argument("malformed machine: " + diagnostics.front());
    if (m.accepting.size() != 1)
        throw std::invalid_argument("the machine must be normalized (exactly one accepting state, found " +
                                    std::to_string(m.accepting.size()) + ")");
    for (auto s : word)
        if (s < 0 || s >= m.neutral())
            throw std::invalid_argument("input word contains a symbol outside the alphabet");

    using GateId = Circuit::GateId;
    const auto& delta = m.transitions;
    const int tapes = m.tapes;
    const int symbols = m.neutral(); // |Sigma|; index symbols is the neutral symbol
    const int states = static_cast<int>(m.states.size());
    const int width = 2 * k + 1;     // positions -k..k
    auto at = [](auto& v, int i) -> auto& { return v[static_cast<std::size_t>(i)]; };

    // Transition index lists behind the Or gates.
    std::vector<std::vector<int>> from(states), to(states);
    std::vector<std::vector<std::vector<int>>> reads(tapes, std::vector<std::vector<int>>(symbols + 1)), writes = reads,
                                                moves(tapes, std::vector<std::vector<int>>(3));
    for (int j = 0; j < static_cast<int>(delta.size()); ++j) {
        const auto& t = at(delta, j);
        at(from, t.from).push_back(j);
        at(to, t.to).push_back(j);
        for (int tape = 0; tape < tapes; ++tape) {
            at(at(reads, tape), at(t.reads, tape)).push_back(j);
            at(at(writes, tape), at(t.writes, tape)).push_back(j);
            at(at(moves, tape), at(t.moves, tape) + 1).push_back(j);
        }
    }

    CircuitBuilder b(k, static_cast<int>(delta.size()));
    auto sum = [&](int step, const std::vector<int>& js) {
        std::vector<GateId> in;
        in.reserve(js.size());
        for (auto j : js)
            in.push_back(b.input(step, j + 1));
        return b.or_of(std::move(in));
    };

    // Per step i (index i - 1): state, symbol and move indicators.
    std::vector<std::vector<GateId>> tau_o(k), tau_n(k);
    std::vector<std::vector<std::vector<GateId>>> sigma_o(k), sigma_n(k), mu(k);
    for (int i = 1; i <= k; ++i) {
        for (int q = 0; q < states; ++q) {
            at(tau_o, i - 1).push_back(sum(i, at(from, q)));
            at(tau_n, i - 1).push_back(sum(i, at(to, q)));
        }
        for (int tape = 0; tape < tapes; ++tape) {
            std::vector<GateId> so, sn, mv;
            for (int s = 0; s <= symbols; ++s) {
                so.push_back(sum(i, at(at(reads, tape), s)));
                sn.push_back(sum(i, at(at(writes, tape), s)));
            }
            for (int d = 0; d < 3; ++d)
                mv.push_back(sum(i, at(at(moves, tape), d)));
            at(sigma_o, i - 1).push_back(std::move(so));
            at(sigma_n, i - 1).push_back(std::move(sn));
            at(mu, i - 1).push_back(std::move(mv));
        }
    }

    // beta[t][l]: head of tape t on cell l before the current step;
    // cell[t][l][s]: cell l of tape t holds s before the current step.
    std::vector<std::vector<GateId>> beta(tapes, std::vector<GateId>(width));
    std::vector<std::vector<std::vector<GateId>>> cell(tapes, std::vector<std::vector<GateId>>(width, std::vector<GateId>(symbols)));
    for (int tape = 0; tape < tapes; ++tape) {
        for (int l = -k; l <= k; ++l) {
            at(at(beta, tape), l + k) = b.constant(l == 0);
            SymbolId initial = kBlank;
            if (tape == 0 && l >= 0 && l < static_cast<int>(word.size()))
                initial = at(word, l);
            for (int s = 0; s < symbols; ++s)
                at(at(at(cell, tape), l + k), s) = b.constant(s == initial);
        }
    }

    std::vector<GateId> out;
    out.push_back(b.not_of(b.constant(false))); // x[-1, -1] is the constant 0
    out.push_back(at(at(tau_o, 0), m.initial));
    out.push_back(at(at(tau_n, k - 1), m.accepting.front()));
    auto keep = [&](GateId g) {
        if (!b.is_const(g, true))
            out.push_back(g);
    };

    // Successive states chain.
    for (int i = 2; i <= k; ++i)
        for (int q = 0; q < states; ++q)
            keep(b.or2(b.not_of(at(at(tau_n, i - 2), q)), at(at(tau_o, i - 1), q)));

    for (int i = 1; i <= k; ++i) {
        if (i > 1) {
            // Advance head and cell indicators over step i - 1.
            const auto& mv = at(mu, i - 2);
            const auto& sn = at(sigma_n, i - 2);
            auto next_beta = beta;
            auto next_cell = cell;
            for (int tape = 0; tape < tapes; ++tape) {
                const auto& bt = at(beta, tape);
                auto prev = [&](int l) { return l < -k || l > k ? b.constant(false) : at(bt, l + k); };
                const auto& m_t = at(mv, tape);
                for (int l = -k; l <= k; ++l) {
                    auto stay = b.and2(prev(l), at(m_t, 1));
                    auto from_left = b.and2(prev(l - 1), at(m_t, 2));
                    auto from_right = b.and2(prev(l + 1), at(m_t, 0));
                    at(at(next_beta, tape), l + k) = b.or2(b.or2(stay, from_left), from_right);
                }
                const auto& sn_t = at(sn, tape);
                for (int l = -k; l <= k; ++l) {
                    auto here = at(bt, l + k);
                    auto kept_blind = b.and2(here, at(sn_t, symbols));
                    for (int s = 0; s < symbols; ++s) {
                        auto before = at(at(at(cell, tape), l + k), s);
                        auto away = b.and2(b.not_of(here), before);
                        auto written = b.and2(here, at(sn_t, s));
                        auto kept = b.and2(kept_blind, before);
                        at(at(at(next_cell, tape), l + k), s) = b.or2(b.or2(away, written), kept);
                    }
                }
            }
            beta = std::move(next_beta);
            cell = std::move(next_cell);
        }
        // The symbol read at step i is the one under the head, unless blind.
        for (int tape = 0; tape < tapes; ++tape) {
            const auto& so = at(at(sigma_o, i - 1), tape);
            for (int l = -k; l <= k; ++l) {
                auto not_here = b.not_of(at(at(beta, tape), l + k));
                for (int s = 0; s < symbols; ++s) {
                    auto not_s = b.not_of(at(at(at(cell, tape), l + k), s));
                    keep(b.or2(b.or2(not_here, not_s), b.or2(at(so, s), at(so, symbols))));
                }
            }
        }
    }

    // At most one transition per step.
    const int count = static_cast<int>(delta.size());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= count; ++j)
            for (int j2 = j + 1; j2 <= count; ++j2)
                keep(b.or2(b.not_of(b.input(i, j)), b.not_of(b.input(i, j2))));

    auto output = b.add(GateKind::And, out);
    return std::move(b).finish(output);
}

} // namespace blindtm
