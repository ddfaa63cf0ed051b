#include "blindtm/builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace blindtm {

BuiltInstance build_code_machine(const FqMatrix& h, int k, CodeMode mode, bool dual)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const int q = h.field_order();
    const int rows = h.rows();
    const int n = h.cols();
    const bool exact = mode == CodeMode::WeightDistribution;

    std::vector<std::string> alphabet{"B", "0", "1"};
    for (int j = 1; j <= n; ++j)
        alphabet.push_back("h" + std::to_string(j));
    MachineBuilder b(rows + 1, alphabet);
    const SymbolId zero = 1, one = 2;
    auto hsym = [](int j) { return static_cast<SymbolId>(2 + j); };
    const auto idle = [&] {
        Transition t;
        t.reads.assign(static_cast<std::size_t>(rows + 1), b.neutral());
        t.writes = t.reads;
        t.moves.assign(static_cast<std::size_t>(rows + 1), 0);
        return t;
    };

    BuiltInstance out;
    out.hints.tape = 0;
    out.hints.complement = dual;
    out.hints.universe = n;
    auto finish = [&](MachineBuilder&& builder, int bound) {
        out.machine = std::move(builder).build();
        out.step_bound = bound;
        out.hints.element_of.assign(out.machine.alphabet.size(), 0);
        for (int j = 1; j <= n; ++j)
            out.hints.element_of[static_cast<std::size_t>(hsym(j))] = j;
        return out;
    };

    // The empty column set: sums to zero, but MinDistance wants it nonempty.
    // A dual MinDistance instance without columns has no nonempty complement.
    if ((!dual && k == 0) || (dual && mode == CodeMode::MinDistance && n == 0)) {
        const auto q0 = b.state("Q0");
        b.set_initial(q0);
        if (exact)
            b.add_accepting(q0);
        return finish(std::move(b), 0);
    }

    // Row head l ends up to k(q-1) cells right of where it started.
    const int cells = k * (q - 1) + 1;
    const int picks = dual && mode == CodeMode::MinDistance ? std::min(k, n - 1) : k;
    auto pattern = [&](int row, int c) {
        int target = dual ? h.row_sum(row) - c : -c;
        return ((target % q) + q) % q == 0;
    };
    auto write_cell = [&](Transition& t, int c) {
        for (int l = 1; l <= rows; ++l)
            t.writes[static_cast<std::size_t>(l)] = pattern(l, c) ? one : zero;
    };
    auto rows_move = [&](Transition& t, int d) {
        for (int l = 1; l <= rows; ++l)
            t.moves[static_cast<std::size_t>(l)] = d;
    };
    auto pstate = [&](int i, int s) { return b.state("P" + std::to_string(i) + "_" + std::to_string(s)); };

    b.set_initial(pstate(1, 0));
    const auto read = b.state("R");
    for (int s = 0; s < cells; ++s) {
        for (int i = 1; i <= n + 1; ++i) {
            if ((s == 0 && i != 1) || (exact && i - 1 < std::min(s, picks)))
                continue;
            const auto from = pstate(i, s);
            const int cell = cells - 1 - s;
            if (s < picks) {
                for (int j = i; j <= n; ++j) {
                    auto t = idle();
                    t.from = from;
                    t.reads[0] = kBlank;
                    t.writes[0] = hsym(j);
                    t.moves[0] = 1;
                    write_cell(t, cell);
                    rows_move(t, -1);
                    t.to = pstate(j + 1, s + 1);
                    b.add(std::move(t));
                }
            }
            if (s >= picks || !exact) {
                auto t = idle();
                t.from = from;
                write_cell(t, cell);
                if (s < cells - 1) {
                    rows_move(t, -1);
                    t.to = pstate(i, s + 1);
                } else {
                    if (!dual && mode == CodeMode::MinDistance && i == 1)
                        continue;
                    t.moves[0] = i == 1 ? 0 : -1;
                    t.to = read;
                }
                b.add(std::move(t));
            }
        }
    }

    // Column i moves row head l by H[l][i] in q - 1 unit sub-steps.
    auto sub = [&](int i, int u) { return b.state("A" + std::to_string(i) + "_" + std::to_string(u)); };
    for (int i = 1; i <= n; ++i) {
        for (int u = 0; u <= q - 2; ++u) {
            auto t = idle();
            t.from = u == 0 ? read : sub(i, u);
            if (u == 0) {
                t.reads[0] = hsym(i);
                t.moves[0] = -1;
            }
            for (int l = 1; l <= rows; ++l)
                if (h.at(l, i) > u)
                    t.moves[static_cast<std::size_t>(l)] = 1;
            t.to = u < q - 2 ? sub(i, u + 1) : read;
            b.add(std::move(t));
        }
    }
    const auto acc = b.state("ACC");
    b.add_accepting(acc);
    auto t = idle();
    t.from = read;
    t.reads[0] = kBlank;
    for (int l = 1; l <= rows; ++l)
        t.reads[static_cast<std::size_t>(l)] = one;
    t.to = acc;
    b.add(std::move(t));
    return finish(std::move(b), 2 * k * (q - 1) + 2);
}

} // namespace blindtm
