#include "blindtm/errors.hpp"
#include "blindtm/instances.hpp"
#include "blindtm/oracles.hpp"

#include "brute.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace blindtm;

namespace {

std::vector<VertexSet> sets_of(const std::vector<unsigned>& masks)
{
    std::vector<VertexSet> out;
    for (auto m : masks)
        out.push_back(brute::members(m));
    std::sort(out.begin(), out.end());
    return out;
}

bool independent(const Graph& g, const VertexSet& d)
{
    for (auto [u, v] : g.edges())
        if (std::binary_search(d.begin(), d.end(), u) && std::binary_search(d.begin(), d.end(), v))
            return false;
    return true;
}

bool dominating(const Graph& g, const VertexSet& d)
{
    for (int v = 1; v <= g.order(); ++v) {
        if (std::binary_search(d.begin(), d.end(), v))
            continue;
        bool hit = false;
        for (int u : d)
            hit |= g.adjacent(u, v);
        if (!hit)
            return false;
    }
    return true;
}

int dist(const Graph& g, int a, int b)
{
    if (a == b)
        return 0;
    if (g.adjacent(a, b))
        return 1;
    for (int c = 1; c <= g.order(); ++c)
        if (g.adjacent(a, c) && g.adjacent(c, b))
            return 2;
    return 3;
}

bool perfect_code(const Graph& g, const VertexSet& d)
{
    if (!independent(g, d))
        return false;
    for (int v = 1; v <= g.order(); ++v) {
        if (std::binary_search(d.begin(), d.end(), v))
            continue;
        if (std::count_if(d.begin(), d.end(), [&](int u) { return g.adjacent(u, v); }) != 1)
            return false;
    }
    return true;
}

// Members pairwise at distance more than two.
bool strong_stable(const Graph& g, const VertexSet& d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (dist(g, d[i], d[j]) <= 2)
                return false;
    return true;
}

template <class Check>
std::vector<VertexSet> definitional(const Graph& g, int k, Check check)
{
    std::vector<VertexSet> out;
    for (unsigned m = 0; m < (1u << g.order()); ++m) {
        auto d = brute::members(m);
        if (static_cast<int>(d.size()) <= k && check(g, d))
            out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("five-cycle has five independent dominating pairs")
{
    auto v = oracle_sigma_rho(fixtures::cycle(5), IntSetSpec::finite({0}, 5), IntSetSpec::positive(5),
                              CardinalityMode::at_most(2));
    CHECK(v.decision);
    CHECK(v.witnesses == std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

TEST_CASE("the empty set dominates when rho is N")
{
    InstanceRng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(rng, rng.below(7));
        auto sets = standard_sets(6);
        auto v = oracle_sigma_rho(g, sets[static_cast<std::size_t>(rng.below(8))].spec, IntSetSpec::all(6),
                                  CardinalityMode::at_most(0));
        CHECK(v.decision);
        CHECK(v.witnesses == std::vector<VertexSet>{{}});
    }
}

TEST_CASE("each endpoint of an edge dominates the other")
{
    auto v = oracle_sigma_rho(fixtures::path(2), IntSetSpec::all(2), IntSetSpec::positive(2), CardinalityMode::at_most(1));
    CHECK(v.witnesses == std::vector<VertexSet>{{1}, {2}});
}

TEST_CASE("kernel examples")
{
    CHECK_FALSE(oracle_kernel(Digraph(3, {{1, 2}, {2, 3}, {3, 1}}), 3).decision);
    CHECK(oracle_kernel(Digraph(2, {{1, 2}}), 1).witnesses == std::vector<VertexSet>{{2}});
    CHECK(oracle_kernel(Digraph(2, {}), 2).witnesses == std::vector<VertexSet>{{1, 2}});
}

TEST_CASE("code examples")
{
    CHECK(oracle_code_sum(FqMatrix(2, 1, 2, {1, 1}), 2, CodeMode::WeightDistribution, false).decision);
    CHECK_FALSE(oracle_code_sum(FqMatrix(2, 2, 2, {1, 0, 0, 1}), 2, CodeMode::MinDistance, false).decision);
    CHECK(oracle_code_sum(FqMatrix(3, 1, 2, {1, 2}), 2, CodeMode::WeightDistribution, false).decision);
    // The empty column set never counts for minimum distance.
    CHECK_FALSE(oracle_code_sum(FqMatrix(2, 1, 1, {1}), 3, CodeMode::MinDistance, false).decision);
    CHECK(oracle_code_sum(FqMatrix(2, 1, 1, {1}), 0, CodeMode::WeightDistribution, false).decision);
}

TEST_CASE("regular examples")
{
    CHECK(oracle_r_regular(fixtures::complete(3), 2, 3).decision);
    CHECK(oracle_r_regular(fixtures::empty(1), 0, 1).decision);
    auto v = oracle_r_regular(fixtures::cycle(5), 1, 2);
    CHECK(v.witnesses == std::vector<VertexSet>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
    CHECK_FALSE(oracle_r_regular(fixtures::cycle(5), 2, 4).decision);
    CHECK_FALSE(oracle_r_regular(fixtures::empty(3), 0, 0).decision);
}

TEST_CASE("named problems are special cases of sigma-rho")
{
    for (int n = 0; n <= 5; ++n) {
        const auto zero = IntSetSpec::finite({0}, n), all = IntSetSpec::all(n), pos = IntSetSpec::positive(n),
                   one = IntSetSpec::finite({1}, n), zero_one = IntSetSpec::finite({0, 1}, n);
        for (const auto& g : all_graphs(n)) {
            const auto m = CardinalityMode::at_most(n);
            CHECK(oracle_sigma_rho(g, zero, all, m).witnesses == definitional(g, n, independent));
            CHECK(oracle_sigma_rho(g, all, pos, m).witnesses == definitional(g, n, dominating));
            CHECK(oracle_sigma_rho(g, zero, one, m).witnesses == definitional(g, n, perfect_code));
            CHECK(oracle_sigma_rho(g, zero, zero_one, m).witnesses == definitional(g, n, strong_stable));
        }
    }
}

TEST_CASE("sigma-rho oracle matches bitmask enumeration in every mode")
{
    InstanceRng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.below(7);
        const auto g = random_graph(rng, n);
        const auto sets = standard_sets(std::max(n, 1));
        const auto sigma = sets[static_cast<std::size_t>(rng.below(8))].spec;
        const auto rho = sets[static_cast<std::size_t>(rng.below(8))].spec;
        const int k = rng.below(4);
        for (auto mode : {CardinalityMode::at_most(k), CardinalityMode::at_least_n_minus(k), CardinalityMode::exactly(k),
                          CardinalityMode::exactly_n_minus(k)}) {
            auto expected = brute::solutions(
                n, [&](int size) { return mode.admits(size, n); },
                [&](unsigned s) { return brute::sigma_rho(g, sigma, rho, s); });
            auto v = oracle_sigma_rho(g, sigma, rho, mode);
            CHECK(v.witnesses == sets_of(expected));
            CHECK(v.decision == !expected.empty());
        }
    }
}

TEST_CASE("cardinality modes")
{
    CHECK(CardinalityMode::at_most(2).admits(0, 5));
    CHECK_FALSE(CardinalityMode::at_most(2).admits(3, 5));
    CHECK(CardinalityMode::at_least_n_minus(2).admits(3, 5));
    CHECK_FALSE(CardinalityMode::at_least_n_minus(2).admits(2, 5));
    CHECK(CardinalityMode::exactly(2).admits(2, 5));
    CHECK(CardinalityMode::exactly_n_minus(2).admits(3, 5));
    CHECK_FALSE(CardinalityMode::exactly_n_minus(2).admits(2, 5));
    CHECK(parse_cardinality("at-least-n-minus") == CardinalityMode::Kind::AtLeastNMinusK);
    CHECK_THROWS(parse_cardinality("most"));
}

TEST_CASE("a dual set and its complement count the same neighbours")
{
    // Enumerate D directly and through S' = V \ D; the two must produce the
    // same family, since |N(v) ∩ D| = deg(v) - |N(v) ∩ S'|.
    InstanceRng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.below(7);
        const auto g = random_graph(rng, n);
        const auto sets = standard_sets(std::max(n, 1));
        const auto sigma = sets[static_cast<std::size_t>(rng.below(8))].spec;
        const auto rho = sets[static_cast<std::size_t>(rng.below(8))].spec;
        const int k = rng.below(4);
        for (auto mode : {CardinalityMode::at_least_n_minus(k), CardinalityMode::exactly_n_minus(k)}) {
            auto direct = oracle_sigma_rho(g, sigma, rho, mode);
            auto by_complement = oracle_sigma_rho_by_complement(g, sigma, rho, mode);
            CHECK(direct.decision == by_complement.decision);
            CHECK(direct.witnesses == by_complement.witnesses);
            for (const auto& d : by_complement.witnesses) {
                unsigned s = 0;
                for (int v = 1; v <= n; ++v)
                    if (!std::binary_search(d.begin(), d.end(), v))
                        s |= 1u << (v - 1);
                for (int v = 1; v <= n; ++v)
                    CHECK(brute::inside(g, v, ((1u << n) - 1) & ~s) == g.degree(v) - brute::inside(g, v, s));
            }
        }
    }
}

TEST_CASE("complement enumeration rejects standard modes")
{
    CHECK_THROWS_AS(oracle_sigma_rho_by_complement(fixtures::cycle(4), IntSetSpec::all(4), IntSetSpec::all(4),
                                                   CardinalityMode::at_most(1)),
                    std::invalid_argument);
}

TEST_CASE("kernel, regular and code oracles match bitmask enumeration")
{
    InstanceRng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.below(7);
        const int k = rng.below(4);
        const auto d = random_digraph(rng, n);
        CHECK(oracle_kernel(d, k).witnesses ==
              sets_of(brute::solutions(n, [&](int s) { return s <= k; }, [&](unsigned m) { return brute::kernel(d, m); })));
        const auto g = random_graph(rng, n);
        const int r = rng.below(3);
        CHECK(oracle_r_regular(g, r, k).witnesses ==
              sets_of(brute::solutions(n, [&](int s) { return s <= k; }, [&](unsigned m) { return brute::regular(g, r, m); })));
        const int q = std::array{2, 3, 5}[static_cast<std::size_t>(rng.below(3))];
        const auto h = random_matrix(rng, q, 1 + rng.below(3), n);
        for (auto mode : {CodeMode::MinDistance, CodeMode::WeightDistribution})
            for (bool dual : {false, true}) {
                const int target = dual ? n - k : k;
                auto expected = brute::solutions(
                    n,
                    [&](int s) {
                        if (mode == CodeMode::WeightDistribution)
                            return s == target;
                        return s > 0 && (dual ? s >= target : s <= target);
                    },
                    [&](unsigned m) { return brute::zero_sum(h, m); });
                CHECK(oracle_code_sum(h, k, mode, dual).witnesses == sets_of(expected));
            }
    }
}

TEST_CASE("definition checks")
{
    const auto c5 = fixtures::cycle(5);
    CHECK(is_sigma_rho_set(c5, IntSetSpec::finite({0}, 5), IntSetSpec::positive(5), {1, 3}));
    CHECK_FALSE(is_sigma_rho_set(c5, IntSetSpec::finite({0}, 5), IntSetSpec::positive(5), {1, 2}));
    CHECK(is_kernel(Digraph(2, {{1, 2}}), {2}));
    CHECK_FALSE(is_kernel(Digraph(2, {{1, 2}}), {1}));
    CHECK(sums_to_zero(FqMatrix(3, 1, 2, {1, 2}), {1, 2}));
    CHECK_FALSE(sums_to_zero(FqMatrix(3, 1, 2, {1, 2}), {1}));
    CHECK(is_r_regular_set(c5, 1, {1, 2}));
    CHECK_FALSE(is_r_regular_set(c5, 1, {1, 3}));
}

TEST_CASE("witness caps keep the decision")
{
    auto v = oracle_sigma_rho(fixtures::cycle(5), IntSetSpec::finite({0}, 5), IntSetSpec::positive(5),
                              CardinalityMode::at_most(2), 1);
    CHECK(v.decision);
    CHECK(v.witnesses == std::vector<VertexSet>{{1, 3}});
    auto none = oracle_kernel(Digraph(3, {{1, 2}, {2, 3}, {3, 1}}), 3, 0);
    CHECK_FALSE(none.decision);
    auto capped = oracle_kernel(Digraph(2, {{1, 2}}), 1, 0);
    CHECK(capped.decision);
    CHECK(capped.witnesses.empty());
}

TEST_CASE("oracles refuse oversized instances")
{
    CHECK_THROWS_AS(oracle_sigma_rho(fixtures::empty(26), IntSetSpec::all(26), IntSetSpec::all(26),
                                     CardinalityMode::at_most(1)),
                    GuardError);
    // 2^25 subsets in total exceeds the subset cap even below the element cap.
    CHECK_THROWS_AS(oracle_sigma_rho(fixtures::empty(25), IntSetSpec::all(25), IntSetSpec::all(25),
                                     CardinalityMode::at_most(25)),
                    GuardError);
    CHECK_NOTHROW(oracle_sigma_rho(fixtures::empty(25), IntSetSpec::all(25), IntSetSpec::all(25),
                                   CardinalityMode::at_most(2)));
    CHECK_THROWS_AS(oracle_kernel(Digraph(26, {}), 1), GuardError);
}
