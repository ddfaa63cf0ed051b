#pragma once

// Bitmask brute force kept apart from the library oracles so the two can be
// checked against each other.

#include "blindtm/fq_matrix.hpp"
#include "blindtm/graph.hpp"
#include "blindtm/int_set.hpp"

#include <bit>
#include <vector>

namespace brute {

inline blindtm::VertexSet members(unsigned mask)
{
    blindtm::VertexSet s;
    for (int v = 0; mask >> v; ++v)
        if (mask >> v & 1u)
            s.push_back(v + 1);
    return s;
}

inline int inside(const blindtm::Graph& g, int v, unsigned mask)
{
    int c = 0;
    for (int u : g.neighbors(v))
        c += static_cast<int>(mask >> (u - 1) & 1u);
    return c;
}

inline bool sigma_rho(const blindtm::Graph& g, const blindtm::IntSetSpec& sigma, const blindtm::IntSetSpec& rho,
                      unsigned mask)
{
    for (int v = 1; v <= g.order(); ++v) {
        const int c = inside(g, v, mask);
        if (!(mask >> (v - 1) & 1u ? sigma.contains(c) : rho.contains(c)))
            return false;
    }
    return true;
}

// Sets admitted by a size predicate, in mask order.
template <class SizeOk, class Good>
std::vector<unsigned> solutions(int n, SizeOk size_ok, Good good)
{
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (size_ok(std::popcount(mask)) && good(mask))
            out.push_back(mask);
    return out;
}

inline bool kernel(const blindtm::Digraph& d, unsigned mask)
{
    for (int v = 1; v <= d.order(); ++v) {
        bool in = mask >> (v - 1) & 1u;
        bool hits = false;
        for (int u : d.out_neighbors(v))
            hits |= static_cast<bool>(mask >> (u - 1) & 1u);
        if (in && hits)
            return false;
        if (!in && !hits)
            return false;
    }
    return true;
}

inline bool regular(const blindtm::Graph& g, int r, unsigned mask)
{
    if (mask == 0)
        return false;
    for (int v = 1; v <= g.order(); ++v)
        if (mask >> (v - 1) & 1u && inside(g, v, mask) != r)
            return false;
    return true;
}

inline bool zero_sum(const blindtm::FqMatrix& h, unsigned mask)
{
    for (int row = 0; row < h.rows(); ++row) {
        int s = 0;
        for (int c = 0; c < h.cols(); ++c)
            if (mask >> c & 1u)
                s += h.at(row + 1, c + 1);
        if (s % h.field_order() != 0)
            return false;
    }
    return true;
}

} // namespace brute
