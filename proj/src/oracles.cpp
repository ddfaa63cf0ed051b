#include "blindtm/oracles.hpp"

#include "blindtm/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <functional>
#include <string>

namespace blindtm {

namespace {

std::size_t binomial_capped(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
        if (r > kOracleMaxSubsets)
            return kOracleMaxSubsets + 1;
    }
    return r;
}

// Visits every subset of {1..n} with size in [lo, hi] in lexicographic order.
OracleVerdict enumerate(int n, int lo, int hi, std::size_t max_witnesses,
                        const std::function<bool(const VertexSet&)>& accept)
{
    if (n > kOracleMaxElements)
        throw GuardError("oracle enumeration limited to " + std::to_string(kOracleMaxElements) + " elements, got " +
                         std::to_string(n));
    lo = std::max(lo, 0);
    hi = std::min(hi, n);
    std::size_t total = 0;
    for (int s = lo; s <= hi; ++s) {
        total += binomial_capped(n, s);
        if (total > kOracleMaxSubsets)
            throw GuardError("oracle enumeration exceeds " + std::to_string(kOracleMaxSubsets) + " subsets");
    }

    OracleVerdict verdict;
    VertexSet current;
    std::function<void(int)> walk = [&](int next) {
        const int size = static_cast<int>(current.size());
        if (size >= lo && size <= hi && accept(current)) {
            verdict.decision = true;
            if (verdict.witnesses.size() < max_witnesses)
                verdict.witnesses.push_back(current);
        }
        if (size == hi)
            return;
        for (int v = next; v <= n; ++v) {
            // Not enough elements left to reach the minimum size.
            if (size + 1 + (n - v) < lo)
                break;
            current.push_back(v);
            walk(v + 1);
            current.pop_back();
        }
    };
    if (lo <= hi)
        walk(1);
    return verdict;
}

std::pair<int, int> size_range(CardinalityMode mode, int n)
{
    switch (mode.kind) {
    case CardinalityMode::Kind::AtMost: return {0, mode.k};
    case CardinalityMode::Kind::AtLeastNMinusK: return {n - mode.k, n};
    case CardinalityMode::Kind::Exactly: return {mode.k, mode.k};
    case CardinalityMode::Kind::ExactlyNMinusK: return {n - mode.k, n - mode.k};
    }
    return {1, 0};
}

int count_in(const std::vector<Vertex>& neighbours, const VertexSet& d)
{
    int c = 0;
    for (auto u : neighbours)
        c += std::binary_search(d.begin(), d.end(), u) ? 1 : 0;
    return c;
}

} // namespace

bool is_sigma_rho_set(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, const VertexSet& d)
{
    for (int v = 1; v <= g.order(); ++v) {
        const int c = count_in(g.neighbors(v), d);
        const bool inside = std::binary_search(d.begin(), d.end(), v);
        if (!(inside ? sigma.contains(c) : rho.contains(c)))
            return false;
    }
    return true;
}

bool is_kernel(const Digraph& g, const VertexSet& s)
{
    for (int x = 1; x <= g.order(); ++x) {
        const int out = count_in(g.out_neighbors(x), s);
        const bool inside = std::binary_search(s.begin(), s.end(), x);
        if (inside ? out != 0 : out == 0)
            return false;
    }
    return true;
}

bool sums_to_zero(const FqMatrix& h, const VertexSet& columns)
{
    for (int l = 1; l <= h.rows(); ++l) {
        int sum = 0;
        for (auto c : columns)
            sum = (sum + h.at(l, c)) % h.field_order();
        if (sum != 0)
            return false;
    }
    return true;
}

bool is_r_regular_set(const Graph& g, int r, const VertexSet& d)
{
    for (auto u : d)
        if (count_in(g.neighbors(u), d) != r)
            return false;
    return true;
}

OracleVerdict oracle_sigma_rho(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho, CardinalityMode mode,
                               std::size_t max_witnesses)
{
    auto [lo, hi] = size_range(mode, g.order());
    return enumerate(g.order(), lo, hi, max_witnesses,
                     [&](const VertexSet& d) { return is_sigma_rho_set(g, sigma, rho, d); });
}

OracleVerdict oracle_sigma_rho_by_complement(const Graph& g, const IntSetSpec& sigma, const IntSetSpec& rho,
                                             CardinalityMode mode, std::size_t max_witnesses)
{
    if (!mode.dual())
        throw std::invalid_argument("complement enumeration needs a dual cardinality mode");
    const int n = g.order();
    const int lo = mode.exact() ? mode.k : 0;
    auto verdict = enumerate(n, lo, mode.k, kAllWitnesses, [&](const VertexSet& excluded) {
        for (int v = 1; v <= n; ++v) {
            const int remaining = g.degree(v) - count_in(g.neighbors(v), excluded);
            const bool in_d = !std::binary_search(excluded.begin(), excluded.end(), v);
            if (!(in_d ? sigma.contains(remaining) : rho.contains(remaining)))
                return false;
        }
        return true;
    });
    for (auto& s : verdict.witnesses) {
        VertexSet d;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(s.begin(), s.end(), v))
                d.push_back(v);
        s = std::move(d);
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end());
    if (verdict.witnesses.size() > max_witnesses)
        verdict.witnesses.resize(max_witnesses);
    return verdict;
}

OracleVerdict oracle_kernel(const Digraph& d, int k, std::size_t max_witnesses)
{
    return enumerate(d.order(), 0, k, max_witnesses, [&](const VertexSet& s) { return is_kernel(d, s); });
}

OracleVerdict oracle_code_sum(const FqMatrix& h, int k, CodeMode mode, bool dual, std::size_t max_witnesses)
{
    const int n = h.cols();
    int lo = 0, hi = 0;
    if (mode == CodeMode::MinDistance) {
        lo = dual ? std::max(1, n - k) : 1;
        hi = dual ? n : k;
    } else {
        lo = hi = dual ? n - k : k;
    }
    return enumerate(n, lo, hi, max_witnesses, [&](const VertexSet& c) { return sums_to_zero(h, c); });
}

OracleVerdict oracle_r_regular(const Graph& g, int r, int k, std::size_t max_witnesses)
{
    return enumerate(g.order(), 1, k, max_witnesses, [&](const VertexSet& d) { return is_r_regular_set(g, r, d); });
}

OracleVerdict oracle_p_rho(const Graph& g, const GraphProperty& p, const IntSetSpec& rho, int k,
                           std::size_t max_witnesses)
{
    return enumerate(g.order(), 0, k, max_witnesses, [&](const VertexSet& d) {
        for (int v = 1; v <= g.order(); ++v)
            if (!std::binary_search(d.begin(), d.end(), v) && !rho.contains(count_in(g.neighbors(v), d)))
                return false;
        return p(g.induced(d));
    });
}

} // namespace blindtm
