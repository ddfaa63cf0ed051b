#include "blindtm/builders.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

namespace blindtm {

namespace {

// Guessing: next pick >= i, s picks so far, first pick f with l neighbours
// among the picks, second pick c (0 if none yet).
struct Guess {
    int i, s, f, l, c;
    auto key() const { return std::tie(i, s, f, l, c); }
    bool operator<(const Guess& o) const { return key() < o.key(); }
};

// Sweeping for vertex t with l neighbours seen, smallest pick above t seen so
// far in next (0 if none), moving in direction dir.
struct Sweep {
    int t, l, next, dir;
    auto key() const { return std::tie(t, l, next, dir); }
    bool operator<(const Sweep& o) const { return key() < o.key(); }
};

} // namespace

BuiltInstance build_induced_r_regular(const Graph& g, int r, int k)
{
    if (r < 0 || k < 0)
        throw std::invalid_argument("r and k must be nonnegative");
    const int n = g.order();
    std::vector<std::string> alphabet{"B"};
    for (int v = 1; v <= n; ++v)
        alphabet.push_back("v" + std::to_string(v));
    MachineBuilder b(1, alphabet);
    auto adj = [&](int u, int v) { return g.adjacent(u, v) ? 1 : 0; };
    auto move = [](StateId from, SymbolId read, SymbolId write, StateId to, int d) {
        return Transition{{read}, from, {write}, to, {d}};
    };

    const auto start = b.state("G0");
    b.set_initial(start);
    const auto acc = b.state("ACC");
    b.add_accepting(acc);

    std::map<Guess, StateId> guesses;
    std::map<Sweep, StateId> sweeps;
    std::deque<Guess> guess_work;
    std::deque<Sweep> sweep_work;
    auto guess_state = [&](Guess x) {
        auto [it, inserted] = guesses.emplace(x, 0);
        if (inserted) {
            it->second = b.state("G" + std::to_string(x.i) + "_" + std::to_string(x.s) + "_" + std::to_string(x.f) +
                                 "_" + std::to_string(x.l) + "_" + std::to_string(x.c));
            guess_work.push_back(x);
        }
        return it->second;
    };
    auto sweep_state = [&](Sweep x) {
        auto [it, inserted] = sweeps.emplace(x, 0);
        if (inserted) {
            it->second = b.state("S" + std::to_string(x.t) + "_" + std::to_string(x.l) + "_" +
                                 std::to_string(x.next) + (x.dir < 0 ? "_L" : "_R"));
            sweep_work.push_back(x);
        }
        return it->second;
    };

    if (k >= 1)
        for (int j = 1; j <= n; ++j)
            b.add(move(start, kBlank, j, guess_state({j + 1, 1, j, 0, 0}), 1));

    while (!guess_work.empty()) {
        auto x = guess_work.front();
        guess_work.pop_front();
        const auto from = guesses.at(x);
        if (x.s < k) {
            for (int j = x.i; j <= n; ++j) {
                const int l = x.l + adj(x.f, j);
                if (l <= r)
                    b.add(move(from, kBlank, j, guess_state({j + 1, x.s + 1, x.f, l, x.c == 0 ? j : x.c}), 1));
            }
        }
        if (x.l == r) {
            if (x.c == 0)
                b.add(move(from, kBlank, kBlank, acc, 0));
            else
                b.add(move(from, kBlank, kBlank, sweep_state({x.c, 0, 0, -1}), -1));
        }
    }

    while (!sweep_work.empty()) {
        auto x = sweep_work.front();
        sweep_work.pop_front();
        const auto from = sweeps.at(x);
        for (int j = 1; j <= n; ++j) {
            const int l = x.l + adj(x.t, j);
            if (l > r)
                continue;
            const int next = j > x.t && (x.next == 0 || j < x.next) ? j : x.next;
            b.add(move(from, j, j, sweep_state({x.t, l, next, x.dir}), x.dir));
        }
        if (x.l == r) {
            if (x.next == 0)
                b.add(move(from, kBlank, kBlank, acc, 0));
            else
                b.add(move(from, kBlank, kBlank, sweep_state({x.next, 0, 0, -x.dir}), -x.dir));
        }
    }

    BuiltInstance out;
    out.machine = std::move(b).build();
    out.step_bound = k * k + k;
    out.hints.tape = 0;
    out.hints.element_of.assign(out.machine.alphabet.size(), 0);
    for (int v = 1; v <= n; ++v)
        out.hints.element_of[static_cast<std::size_t>(v)] = v;
    out.hints.universe = n;
    return out;
}

} // namespace blindtm
