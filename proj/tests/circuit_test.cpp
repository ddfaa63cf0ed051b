#include "blindtm/builders.hpp"
#include "blindtm/circuit.hpp"
#include "blindtm/errors.hpp"
#include "blindtm/instances.hpp"
#include "blindtm/machine.hpp"
#include "blindtm/simulator.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace blindtm;

namespace {

using GateId = Circuit::GateId;

// Straight recursive evaluation, memoised per gate.
bool reference_value(const Circuit& c, const Assignment& a)
{
    std::vector<int> memo(c.gate_count(), -1);
    std::function<bool(GateId)> value = [&](GateId g) -> bool {
        if (memo[g] >= 0)
            return memo[g] != 0;
        bool v = false;
        auto in = c.fanin(g);
        switch (c.kind(g)) {
        case GateKind::Input: v = a[c.input_index(g)]; break;
        case GateKind::Const0: v = false; break;
        case GateKind::Const1: v = true; break;
        case GateKind::Not: v = !value(in[0]); break;
        case GateKind::And: v = std::all_of(in.begin(), in.end(), value); break;
        case GateKind::Or: v = std::any_of(in.begin(), in.end(), value); break;
        }
        memo[g] = v;
        return v;
    };
    return value(c.output());
}

// Does the transition sequence run from the initial configuration into the
// accepting state, each step applicable?
bool accepting_run(const BlindMachine& m, std::span<const SymbolId> word, const std::vector<std::size_t>& seq)
{
    auto c = Configuration::initial(m, word);
    for (auto t : seq) {
        auto ok = applicable(m, c);
        if (std::find(ok.begin(), ok.end(), t) == ok.end())
            return false;
        c = step(m, c, t);
    }
    return m.is_accepting(c.state());
}

BlindMachine random_machine(InstanceRng& rng, int tapes)
{
    BlindMachine m;
    m.tapes = tapes;
    m.alphabet = {"B", "a"};
    const int states = 1 + rng.below(3);
    for (int q = 0; q < states; ++q)
        m.states.push_back("q" + std::to_string(q));
    m.initial = 0;
    m.accepting = {rng.below(states)};
    const int count = 1 + rng.below(4);
    for (int i = 0; i < count; ++i) {
        Transition t;
        t.from = rng.below(states);
        t.to = rng.below(states);
        for (int tape = 0; tape < tapes; ++tape) {
            t.reads.push_back(rng.below(3));
            t.writes.push_back(rng.below(3));
            t.moves.push_back(rng.below(3) - 1);
        }
        m.transitions.push_back(t);
    }
    return m;
}

// Every weight-`w` subset of n positions, in lexicographic order.
void each_combination(int n, int w, const std::function<void(const Assignment&)>& visit)
{
    std::vector<int> pick(static_cast<std::size_t>(w));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == w) {
            Assignment a(static_cast<std::size_t>(n), false);
            for (int p : pick)
                a[static_cast<std::size_t>(p)] = true;
            visit(a);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("single input and constants")
{
    CircuitBuilder b(1, 1);
    auto c = std::move(b).finish(b.input(1, 1));
    CHECK(evaluate(c, {true}));
    CHECK_FALSE(evaluate(c, {false}));
    CHECK_THROWS_AS(evaluate(c, {}), std::invalid_argument);
    CHECK_FALSE(weighted_sat_brute(c, 0).has_value());
    CHECK(weighted_sat_brute(c, 1) == Assignment{true});

    CircuitBuilder k;
    auto one = std::move(k).finish(k.constant(true));
    CHECK(weighted_sat_brute(one, 0) == Assignment{});
}

TEST_CASE("a wide or with all inputs false")
{
    CircuitBuilder b(5, 1);
    std::vector<GateId> in;
    for (int i = 1; i <= 5; ++i)
        in.push_back(b.input(i, 1));
    auto c = std::move(b).finish(b.or_of(in));
    CHECK_FALSE(evaluate(c, Assignment(5, false)));
    auto s = analyze(c);
    CHECK(s.weft == 1);
    CHECK(s.depth == 1);
    CHECK(s.large_gate_count == 1);
}

TEST_CASE("weft counts large gates only")
{
    CircuitBuilder small(2, 2);
    auto x = small.and2(small.input(1, 1), small.input(1, 2));
    auto y = small.or2(x, small.not_of(small.input(2, 1)));
    auto c = std::move(small).finish(small.and2(y, small.input(2, 2)));
    auto s = analyze(c);
    CHECK(s.weft == 0);
    CHECK(s.depth == 3);

    CircuitBuilder wide(10, 1);
    std::vector<GateId> in;
    for (int i = 1; i <= 10; ++i)
        in.push_back(wide.input(i, 1));
    auto or10 = wide.or_of(in);
    auto w = std::move(wide).finish(or10);
    CHECK(analyze(w).weft == 1);
    CHECK(analyze(w).depth == 1);
}

TEST_CASE("builder folding")
{
    CircuitBuilder b(1, 2);
    auto x = b.input(1, 1);
    CHECK(b.and2(x, b.constant(true)) == x);
    CHECK(b.is_const(b.and2(x, b.constant(false)), false));
    CHECK(b.is_const(b.or2(x, b.constant(true)), true));
    CHECK(b.not_of(x) == b.not_of(x));
    CHECK(b.is_const(b.not_of(b.constant(false)), true));
    CHECK(b.is_const(b.and_of({}), true));
    CHECK(b.is_const(b.or_of({}), false));
    const GateId bad[] = {99};
    CHECK_THROWS_AS(b.add(GateKind::Not, bad), std::invalid_argument);
}

TEST_CASE("evaluate matches a recursive reference on random circuits")
{
    InstanceRng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const int steps = 1 + rng.below(3), trans = 1 + rng.below(3);
        CircuitBuilder b(steps, trans);
        std::vector<GateId> pool;
        for (int i = 1; i <= steps; ++i)
            for (int j = 1; j <= trans; ++j)
                pool.push_back(b.input(i, j));
        for (int g = 0; g < 12; ++g) {
            const int kind = rng.below(3);
            auto pick = [&] { return pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))]; };
            if (kind == 0) {
                GateId in[] = {pick()};
                pool.push_back(b.add(GateKind::Not, in));
            } else {
                std::vector<GateId> in(static_cast<std::size_t>(1 + rng.below(4)));
                for (auto& x : in)
                    x = pick();
                pool.push_back(b.add(kind == 1 ? GateKind::And : GateKind::Or, in));
            }
        }
        auto c = std::move(b).finish(pool.back());
        const int n = steps * trans;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Assignment a(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(i)] = mask >> i & 1u;
            CHECK(evaluate(c, a) == reference_value(c, a));
        }
        for (int w = 0; w <= n; ++w) {
            std::optional<Assignment> first;
            each_combination(n, w, [&](const Assignment& a) {
                if (!first && reference_value(c, a))
                    first = a;
            });
            CHECK(weighted_sat_brute(c, w) == first);
        }
    }
}

TEST_CASE("the brute force guard")
{
    CircuitBuilder b(40, 10);
    auto c = std::move(b).finish(b.input(1, 1));
    CHECK_THROWS_AS(weighted_sat_brute(c, 5), GuardError);
    CHECK_NOTHROW(weighted_sat_brute(c, 2));
}

TEST_CASE("compiled circuits accept exactly the accepting runs")
{
    InstanceRng rng(2);
    int satisfiable = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto m = random_machine(rng, 1 + rng.below(2));
        const std::vector<SymbolId> word = rng.coin(2) ? std::vector<SymbolId>{} : std::vector<SymbolId>{1};
        const int k = 1 + rng.below(3);
        const auto c = compile_circuit(m, word, k);
        const int trans = static_cast<int>(m.transitions.size());
        REQUIRE(c.steps() == k);
        REQUIRE(c.transitions() == trans);
        bool any = false;
        each_combination(k * trans, k, [&](const Assignment& a) {
            auto seq = witness_from_assignment(c, a);
            const bool expected = seq && accepting_run(m, word, *seq);
            CHECK(evaluate(c, a) == expected);
            any |= expected;
        });
        CHECK(any == accepts_in_exactly(m, word, k).accepted);
        satisfiable += any;
        CHECK(weighted_sat_blocks(c) == weighted_sat_brute(c, k));
    }
    CHECK(satisfiable > 10);
}

TEST_CASE("heads stay inside the compiled window")
{
    // One tape that must walk k cells right and read back an a written there.
    auto m = parse_machine(R"(machine
tapes 1
alphabet B a
states q acc
initial q
accepting acc
trans B q B q 1
trans a q a acc 0
)");
    for (int k = 1; k <= 4; ++k) {
        std::vector<SymbolId> word(static_cast<std::size_t>(k), 0);
        word.back() = 1;
        const auto c = compile_circuit(m, word, k);
        CHECK(weighted_sat_blocks(c).has_value() == accepts_in_exactly(m, word, k).accepted);
    }
}

TEST_CASE("the five-cycle instance compiles to a satisfiable weft-2 circuit")
{
    auto b = build_sigma_rho(fixtures::cycle(5), IntSetSpec::finite({0}, 5), IntSetSpec::positive(5),
                             CardinalityMode::at_most(2));
    auto n = normalize_for_exact(b.machine);
    const int k = b.step_bound + 2;
    auto c = compile_circuit(n, {}, k);
    CHECK(analyze(c).weft == 2);
    auto a = weighted_sat_blocks(c);
    REQUIRE(a.has_value());
    CHECK(std::count(a->begin(), a->end(), true) == k);
    auto seq = witness_from_assignment(c, *a);
    REQUIRE(seq.has_value());
    CHECK(accepting_run(n, {}, *seq));

    auto r = accepts_in_exactly(n, {}, k);
    REQUIRE(r.accepted);
    CHECK(evaluate(c, assignment_from_witness(c, r.witness)));
}

TEST_CASE("a machine that never accepts compiles to an unsatisfiable circuit")
{
    auto m = parse_machine(R"(machine
tapes 1
alphabet B a
states q r acc
initial q
accepting acc
trans _ q a r 1
trans _ r _ q -1
)");
    auto n = normalize_for_exact(m);
    for (int k = 1; k <= 6; ++k) {
        auto c = compile_circuit(n, {}, k);
        CHECK_FALSE(weighted_sat_blocks(c).has_value());
        for (int w = 0; w <= 3; ++w)
            CHECK_FALSE(weighted_sat_brute(c, w).has_value());
    }
}

TEST_CASE("compiled builder circuits have weft 2 and depth fixed by k")
{
    for (int k = 0; k <= 2; ++k) {
        std::vector<int> depths;
        for (int n = 1; n <= 5; ++n) {
            const int bound = std::max(n, k);
            auto b = build_sigma_rho(fixtures::cycle(n), IntSetSpec::finite({0}, bound), IntSetSpec::positive(bound),
                                     CardinalityMode::at_most(k));
            auto c = compile_circuit(normalize_for_exact(b.machine), {}, b.step_bound + 2);
            auto s = analyze(c);
            CHECK(s.weft == 2);
            CHECK(s.weft <= s.depth);
            depths.push_back(s.depth);
        }
        CHECK(std::adjacent_find(depths.begin(), depths.end(), std::not_equal_to<>()) == depths.end());
    }
}

TEST_CASE("gate count stays within a constant times k^2 |Sigma| m |Delta|")
{
    InstanceRng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + rng.below(5), k = rng.below(3);
        auto b = build_sigma_rho(random_graph(rng, n), IntSetSpec::all(std::max(n, k)), IntSetSpec::positive(std::max(n, k)),
                                 CardinalityMode::at_most(k));
        auto m = normalize_for_exact(b.machine);
        const int steps = b.step_bound + 2;
        auto c = compile_circuit(m, {}, steps);
        const double scale = 1.0 * steps * steps * static_cast<double>(m.alphabet.size() + 1) * m.tapes *
                             static_cast<double>(m.transitions.size());
        CHECK(static_cast<double>(c.gate_count()) <= scale);
    }
}

TEST_CASE("compile rejects unnormalized machines and bad arguments")
{
    auto two = parse_machine("machine\ntapes 1\nalphabet B\nstates q r\ninitial q\naccepting q r\n");
    CHECK_THROWS_AS(compile_circuit(two, {}, 2), std::invalid_argument);
    auto one = normalize_for_exact(two);
    CHECK_THROWS_AS(compile_circuit(one, {}, 0), std::invalid_argument);
    const std::vector<SymbolId> bad{7};
    CHECK_THROWS_AS(compile_circuit(one, bad, 1), std::invalid_argument);
    CHECK_NOTHROW(compile_circuit(one, {}, 1));
}

TEST_CASE("circuit files round-trip")
{
    auto b = build_induced_r_regular(fixtures::path(2), 1, 2);
    auto c = compile_circuit(normalize_for_exact(b.machine), {}, 4);
    auto text = serialize_circuit(c);
    auto back = parse_circuit(text);
    CHECK(serialize_circuit(back) == text);
    CHECK(back.gate_count() == c.gate_count());
    CHECK(weighted_sat_blocks(back) == weighted_sat_blocks(c));
    CHECK(analyze(back).depth == analyze(c).depth);
}

TEST_CASE("circuit parse errors")
{
    auto line_of = [](const std::string& text) {
        try {
            parse_circuit(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("circuit 1\ninput 0 1 1\nand 1 5\noutput 1\n") == 3);
    CHECK(line_of("circuit 1\ninput 0 1 1\nnot 1 0 0\noutput 1\n") == 3);
    CHECK(line_of("circuit 1\ninput 0 1 1\nconst 2 1\noutput 2\n") == 3);
    CHECK(line_of("circuit 1\ninput 0 1 1\nxor 1 0\n") == 3);
    // Whole-file problems report line 0.
    CHECK(line_of("circuit 1\ninput 0 1 1\n") == 0);
    CHECK(line_of("circuit 1\ninput 0 1 1\noutput 0\n") == -1);
}

TEST_CASE("witness translation")
{
    CircuitBuilder b(2, 3);
    auto c = std::move(b).finish(b.constant(true));
    const std::size_t w[] = {2, 0};
    auto a = assignment_from_witness(c, w);
    CHECK(a == Assignment{false, false, true, true, false, false});
    CHECK(witness_from_assignment(c, a) == std::vector<std::size_t>{2, 0});
    CHECK_FALSE(witness_from_assignment(c, Assignment{true, true, false, true, false, false}).has_value());
    CHECK_FALSE(witness_from_assignment(c, Assignment(6, false)).has_value());
}
