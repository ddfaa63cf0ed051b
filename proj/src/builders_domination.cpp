#include "blindtm/builders.hpp"

#include <stdexcept>
#include <string>

namespace blindtm {

namespace {

// Everything the three-phase machine needs from a concrete problem.
struct CountingSpec {
    int n = 0;
    int k = 0;
    bool exact = false;
    bool complement = false;
    // heads[v]: vertex tapes advanced when v is read back in the last phase.
    std::vector<std::vector<Vertex>> heads;
    // Pattern for vertices left off tape 0 (out) and put on it (in), cells 0..k.
    std::vector<std::vector<bool>> out;
    std::vector<std::vector<bool>> in;
};

std::string name(const char* prefix, int a, int b)
{
    return prefix + std::to_string(a) + "_" + std::to_string(b);
}

BuiltInstance build_counting_machine(const CountingSpec& spec)
{
    const int n = spec.n;
    const int k = spec.k;
    std::vector<std::string> alphabet{"B", "0", "1"};
    for (int v = 1; v <= n; ++v)
        alphabet.push_back("v" + std::to_string(v));
    MachineBuilder b(n + 1, alphabet);
    const SymbolId blank = kBlank, zero = 1, one = 2;
    auto vsym = [](Vertex v) { return static_cast<SymbolId>(2 + v); };
    auto bit = [&](bool x) { return x ? one : zero; };
    const auto idle = [&] {
        Transition t;
        t.reads.assign(static_cast<std::size_t>(n + 1), b.neutral());
        t.writes = t.reads;
        t.moves.assign(static_cast<std::size_t>(n + 1), 0);
        return t;
    };
    auto all_vertices_move = [&](Transition& t, int d) {
        for (int v = 1; v <= n; ++v)
            t.moves[static_cast<std::size_t>(v)] = d;
    };

    b.set_initial(b.state(name("P", 1, 0)));

    // Phase 1: pick vertices in increasing order while laying out the outside
    // pattern right to left, so the head ends on cell 0 of the pattern.
    for (int s = 0; s <= k; ++s) {
        for (int i = 1; i <= n + 1; ++i) {
            // Unreachable: i - 1 is the last pick and at most s picks were made.
            if ((s == 0 && i != 1) || (spec.exact && i - 1 < s))
                continue;
            const auto from = b.state(name("P", i, s));
            auto pattern = [&](Transition& t, int cell) {
                for (int v = 1; v <= n; ++v)
                    t.writes[static_cast<std::size_t>(v)] = bit(spec.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(cell)]);
            };
            if (s < k) {
                for (int j = i; j <= n; ++j) {
                    auto t = idle();
                    t.from = from;
                    t.reads[0] = blank;
                    t.writes[0] = vsym(j);
                    t.moves[0] = 1;
                    pattern(t, k - s);
                    all_vertices_move(t, -1);
                    t.to = b.state(name("P", j + 1, s + 1));
                    b.add(std::move(t));
                }
                if (!spec.exact) {
                    auto t = idle();
                    t.from = from;
                    pattern(t, k - s);
                    all_vertices_move(t, -1);
                    t.to = b.state(name("P", i, s + 1));
                    b.add(std::move(t));
                }
            } else {
                auto t = idle();
                t.from = from;
                pattern(t, 0);
                if (i == 1) {
                    t.to = b.state("READ");
                } else {
                    t.moves[0] = -1;
                    t.to = b.state("SIG");
                }
                b.add(std::move(t));
            }
        }
    }

    // Phase 2: walk tape 0 backwards and overwrite the pattern of every picked
    // vertex with the inside pattern.
    if (k > 0) {
        const auto sig = b.state("SIG");
        for (int i = 1; i <= n; ++i) {
            const auto vi = static_cast<std::size_t>(i);
            auto t = idle();
            t.from = sig;
            t.reads[0] = vsym(i);
            t.writes[vi] = bit(spec.in[vi][0]);
            all_vertices_move(t, 1);
            t.to = b.state(name("SW", i, 1));
            b.add(std::move(t));
            for (int c = 1; c <= k; ++c) {
                auto w = idle();
                w.from = b.state(name("SW", i, c));
                w.writes[vi] = bit(spec.in[vi][static_cast<std::size_t>(c)]);
                if (c < k) {
                    all_vertices_move(w, 1);
                    w.to = b.state(name("SW", i, c + 1));
                } else {
                    all_vertices_move(w, -1);
                    if (k == 1) {
                        w.moves[0] = -1;
                        w.to = sig;
                    } else {
                        w.to = b.state("RET1");
                    }
                }
                b.add(std::move(w));
            }
        }
        for (int r = 1; r < k; ++r) {
            auto t = idle();
            t.from = b.state("RET" + std::to_string(r));
            all_vertices_move(t, -1);
            if (r == k - 1) {
                t.moves[0] = -1;
                t.to = sig;
            } else {
                t.to = b.state("RET" + std::to_string(r + 1));
            }
            b.add(std::move(t));
        }
        auto t = idle();
        t.from = sig;
        t.reads[0] = blank;
        t.moves[0] = 1;
        t.to = b.state("READ");
        b.add(std::move(t));
    }

    // Phase 3: one blind step per picked vertex advances the heads it counts for.
    const auto read = b.state("READ");
    for (int i = 1; i <= n; ++i) {
        auto t = idle();
        t.from = read;
        t.reads[0] = vsym(i);
        t.moves[0] = 1;
        for (auto u : spec.heads[static_cast<std::size_t>(i)])
            t.moves[static_cast<std::size_t>(u)] = 1;
        t.to = read;
        b.add(std::move(t));
    }
    const auto acc = b.state("ACC");
    b.add_accepting(acc);
    {
        auto t = idle();
        t.from = read;
        t.reads[0] = blank;
        for (int v = 1; v <= n; ++v)
            t.reads[static_cast<std::size_t>(v)] = one;
        t.to = acc;
        b.add(std::move(t));
    }

    BuiltInstance out;
    out.machine = std::move(b).build();
    out.step_bound = k == 0 ? 2 : 2 * k * k + 2 * k + 3;
    out.hints.tape = 0;
    out.hints.element_of.assign(out.machine.alphabet.size(), 0);
    for (int v = 1; v <= n; ++v)
        out.hints.element_of[static_cast<std::size_t>(vsym(v))] = v;
    out.hints.complement = spec.complement;
    out.hints.universe = n;
    return out;
}

} // namespace

BuiltInstance build_sigma_rho(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, CardinalityMode mode)
{
    const int n = g.order();
    const int k = mode.k;
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const int needed = mode.dual() ? g.max_degree() : k;
    if (sigma.bound() < needed || rho.bound() < needed)
        throw std::invalid_argument("sigma and rho must be decidable up to " + std::to_string(needed));

    CountingSpec spec;
    spec.n = n;
    spec.k = k;
    spec.exact = mode.exact();
    spec.complement = mode.dual();
    spec.heads.resize(static_cast<std::size_t>(n + 1));
    spec.out.assign(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(k + 1)));
    spec.in = spec.out;
    for (int v = 1; v <= n; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        spec.heads[vi] = g.neighbors(v);
        for (int c = 0; c <= k; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            if (!mode.dual()) {
                spec.out[vi][ci] = rho.contains(c);
                spec.in[vi][ci] = sigma.contains(c);
            } else {
                // Tape 0 holds the excluded vertices; count c of them leaves
                // degree - c neighbours inside the solution.
                const int inside = g.degree(v) - c;
                spec.out[vi][ci] = inside >= 0 && sigma.contains(inside);
                spec.in[vi][ci] = inside >= 0 && rho.contains(inside);
            }
        }
    }
    return build_counting_machine(spec);
}

BuiltInstance build_digraph_kernel(const Digraph& d, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const int n = d.order();
    CountingSpec spec;
    spec.n = n;
    spec.k = k;
    spec.heads.resize(static_cast<std::size_t>(n + 1));
    spec.out.assign(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(k + 1), true));
    spec.in = spec.out;
    for (int v = 1; v <= n; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        // x outside needs an arc into D, so picking v advances its in-neighbours.
        spec.heads[vi] = d.in_neighbors(v);
        spec.out[vi][0] = false;
        for (int c = 1; c <= k; ++c)
            spec.in[vi][static_cast<std::size_t>(c)] = false;
    }
    return build_counting_machine(spec);
}

} // namespace blindtm
