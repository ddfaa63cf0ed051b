#include "blindtm/errors.hpp"
#include "blindtm/instances.hpp"
#include "blindtm/reductions.hpp"

#include "brute.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <bit>

using namespace blindtm;

namespace {

bool independent(const Graph& g, unsigned m)
{
    for (auto [u, v] : g.edges())
        if ((m >> (u - 1) & 1u) && (m >> (v - 1) & 1u))
            return false;
    return true;
}

// Independent and no outside vertex sees two members.
bool strong_stable(const Graph& g, unsigned m)
{
    if (!independent(g, m))
        return false;
    for (int v = 1; v <= g.order(); ++v)
        if (!(m >> (v - 1) & 1u) && brute::inside(g, v, m) > 1)
            return false;
    return true;
}

template <class Pred>
bool some_of_size(int n, int k, Pred pred)
{
    for (unsigned m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k && pred(m))
            return true;
    return false;
}

} // namespace

TEST_CASE("an edgeless graph maps to itself")
{
    auto r = reduce_is_to_sss(fixtures::empty(3));
    CHECK(r.g_prime == fixtures::empty(3));
    CHECK(r.origin.size() == 3);
}

TEST_CASE("a single edge gets one edge-vertex")
{
    auto r = reduce_is_to_sss(fixtures::path(2), 1);
    CHECK(r.k == 1);
    CHECK(r.g_prime == Graph(3, {{1, 3}, {2, 3}}));
    CHECK(r.origin[2] == Origin{true, 0, {1, 2}});
    CHECK(r.origin[0] == Origin{false, 1, {0, 0}});
}

TEST_CASE("the five-cycle gives ten vertices and twenty edges")
{
    auto r = reduce_is_to_sss(fixtures::cycle(5));
    CHECK(r.g_prime.order() == 10);
    CHECK(r.g_prime.size() == 20);
}

TEST_CASE("structure of the reduced graph")
{
    InstanceRng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(rng, rng.below(7));
        const auto r = reduce_is_to_sss(g);
        const int n = g.order(), m = g.size();
        REQUIRE(r.g_prime.order() == n + m);
        CHECK(r.g_prime.size() == 2 * m + m * (m - 1) / 2);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                CHECK_FALSE(r.g_prime.adjacent(u, v));
        for (int e = 0; e < m; ++e) {
            const auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
            const int x = n + 1 + e;
            CHECK(r.origin[static_cast<std::size_t>(x - 1)] == Origin{true, 0, {a, b}});
            for (int v = 1; v <= n; ++v)
                CHECK(r.g_prime.adjacent(v, x) == (v == a || v == b));
            for (int y = n + 1; y <= n + m; ++y)
                if (y != x)
                    CHECK(r.g_prime.adjacent(x, y));
        }
        for (int e = 1; e < m; ++e)
            CHECK(g.edges()[static_cast<std::size_t>(e - 1)] < g.edges()[static_cast<std::size_t>(e)]);
    }
}

TEST_CASE("independent sets of g are strong stable sets of g'")
{
    InstanceRng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(rng, rng.below(7));
        const auto r = reduce_is_to_sss(g);
        for (unsigned m = 0; m < (1u << g.order()); ++m)
            if (independent(g, m))
                CHECK(strong_stable(r.g_prime, m));
    }
}

TEST_CASE("verify_reduction examples")
{
    CHECK(verify_reduction(fixtures::cycle(5), 2));
    CHECK(verify_reduction(fixtures::complete(3), 2));
    CHECK(verify_reduction(fixtures::path(4), 0));
}

TEST_CASE("the reduction preserves answers on every graph with four vertices")
{
    for (int n = 0; n <= 4; ++n)
        for (const auto& g : all_graphs(n)) {
            const auto r = reduce_is_to_sss(g);
            const int big = r.g_prime.order();
            for (int k = 0; k <= n; ++k) {
                const bool is = some_of_size(n, k, [&](unsigned m) { return independent(g, m); });
                const bool sss = some_of_size(big, k, [&](unsigned m) { return strong_stable(r.g_prime, m); });
                CHECK(is == sss);
                CHECK(verify_reduction(g, k));
            }
        }
}

TEST_CASE("serialized reductions parse back as the reduced graph")
{
    auto r = reduce_is_to_sss(fixtures::cycle(4), 2);
    auto text = serialize_reduced(r);
    CHECK(parse_graph(text) == r.g_prime);
    CHECK(text.find("# origin 5 edge 1 2") != std::string::npos);
    CHECK(text.find("# origin 1 vertex 1") != std::string::npos);
}

TEST_CASE("verification is guarded")
{
    CHECK_THROWS_AS(verify_reduction(fixtures::complete(7), 2), GuardError);
}
