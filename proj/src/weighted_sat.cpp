#include "blindtm/circuit.hpp"

#include "blindtm/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace blindtm {

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return r;
}

} // namespace

std::optional<Assignment> weighted_sat_brute(const Circuit& c, int weight, std::size_t limit)
{
    const auto n = c.inputs().size();
    if (weight < 0 || static_cast<std::size_t>(weight) > n)
        return std::nullopt;
    const auto w = static_cast<std::size_t>(weight);
    if (binomial_capped(n, w, limit) > limit)
        throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(weight) + ") assignments exceed the limit of " +
                         std::to_string(limit));
    std::vector<std::size_t> pick(w);
    for (std::size_t i = 0; i < w; ++i)
        pick[i] = i;
    Assignment a(n, false);
    while (true) {
        std::fill(a.begin(), a.end(), false);
        for (auto p : pick)
            a[p] = true;
        if (evaluate(c, a))
            return a;
        // Next combination in lexicographic order.
        std::size_t i = w;
        while (i > 0 && pick[i - 1] == n - w + (i - 1))
            --i;
        if (i == 0)
            return std::nullopt;
        ++pick[i - 1];
        for (auto j = i; j < w; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

namespace {

// Lazy evaluator for the block search. A cached value stays valid while the
// stamp of the gate's settling step is unchanged.
class BlockEvaluator {
public:
    using GateId = Circuit::GateId;

    explicit BlockEvaluator(const Circuit& c)
        : c_(c), last_step_(c.gate_count(), 0), cached_at_(c.gate_count(), 0), value_(c.gate_count(), 0),
          chosen_(static_cast<std::size_t>(c.steps()) + 1, 0), stamp_(static_cast<std::size_t>(c.steps()) + 1, 1),
          words_((static_cast<std::size_t>(c.transitions()) + 1 + 63) / 64), selector_(c.gate_count(), -1)
    {
        for (GateId g = 0; g < c.gate_count(); ++g) {
            if (c.kind(g) == GateKind::Input)
                last_step_[g] = c.input_step(g);
            for (auto f : c.fanin(g))
                last_step_[g] = std::max(last_step_[g], last_step_[f]);
            index_selector(g);
        }
    }

    int last_step(GateId g) const { return last_step_[g]; }

    void choose(int step, int transition)
    {
        chosen_[static_cast<std::size_t>(step)] = transition;
        stamp_[static_cast<std::size_t>(step)] = ++clock_;
    }
    int chosen(int step) const { return chosen_[static_cast<std::size_t>(step)]; }

    bool eval(GateId g)
    {
        const auto valid = stamp_[static_cast<std::size_t>(last_step_[g])];
        if (cached_at_[g] == valid)
            return value_[g] != 0;
        bool v = false;
        if (selector_[g] >= 0) {
            // Or over inputs of one step: true iff that step's choice is among them.
            const auto j = static_cast<std::size_t>(chosen_[static_cast<std::size_t>(last_step_[g])]);
            v = bits_[static_cast<std::size_t>(selector_[g]) * words_ + j / 64] >> (j % 64) & 1u;
        } else {
            auto in = c_.fanin(g);
            switch (c_.kind(g)) {
            case GateKind::Input: v = chosen_[static_cast<std::size_t>(last_step_[g])] == c_.input_transition(g); break;
            case GateKind::Const0: v = false; break;
            case GateKind::Const1: v = true; break;
            case GateKind::Not: v = !eval(in[0]); break;
            case GateKind::And:
                v = true;
                for (auto f : in)
                    if (!eval(f)) {
                        v = false;
                        break;
                    }
                break;
            case GateKind::Or:
                for (auto f : in)
                    if (eval(f)) {
                        v = true;
                        break;
                    }
                break;
            }
        }
        value_[g] = v ? 1 : 0;
        cached_at_[g] = valid;
        return v;
    }

private:
    void index_selector(GateId g)
    {
        if (c_.kind(g) != GateKind::Or)
            return;
        auto in = c_.fanin(g);
        for (auto f : in)
            if (c_.kind(f) != GateKind::Input || last_step_[f] != last_step_[g])
                return;
        selector_[g] = static_cast<std::int64_t>(bits_.size() / words_);
        bits_.resize(bits_.size() + words_, 0);
        auto* row = bits_.data() + bits_.size() - words_;
        for (auto f : in) {
            const auto j = static_cast<std::size_t>(c_.input_transition(f));
            row[j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }

    const Circuit& c_;
    std::vector<int> last_step_;
    std::vector<std::uint64_t> cached_at_;
    std::vector<char> value_;
    std::vector<int> chosen_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t clock_ = 1;
    std::size_t words_;
    std::vector<std::int64_t> selector_;
    std::vector<std::uint64_t> bits_;
};

} // namespace

std::optional<Assignment> weighted_sat_blocks(const Circuit& c, std::size_t node_limit)
{
    using GateId = Circuit::GateId;
    const int steps = c.steps();
    const int transitions = c.transitions();
    BlockEvaluator ev(c);

    // Output conjuncts grouped by the step that settles them.
    std::vector<std::vector<GateId>> checks(static_cast<std::size_t>(steps) + 1);
    if (c.kind(c.output()) == GateKind::And)
        for (auto f : c.fanin(c.output()))
            checks[static_cast<std::size_t>(ev.last_step(f))].push_back(f);
    else
        checks[static_cast<std::size_t>(ev.last_step(c.output()))].push_back(c.output());
    auto settled_ok = [&](int step) {
        for (auto g : checks[static_cast<std::size_t>(step)])
            if (!ev.eval(g))
                return false;
        return true;
    };

    if (!settled_ok(0))
        return std::nullopt;
    std::size_t nodes = 0;
    std::function<bool(int)> search = [&](int i) -> bool {
        if (i > steps)
            return true;
        for (int j = 1; j <= transitions; ++j) {
            if (++nodes > node_limit)
                throw GuardError("weighted satisfiability search exceeds " + std::to_string(node_limit) + " nodes");
            ev.choose(i, j);
            if (settled_ok(i) && search(i + 1))
                return true;
        }
        ev.choose(i, 0);
        return false;
    };
    if (!search(1))
        return std::nullopt;
    Assignment a(c.inputs().size(), false);
    for (int i = 1; i <= steps; ++i)
        a[c.input_index(c.input(i, ev.chosen(i)))] = true;
    return a;
}

} // namespace blindtm
