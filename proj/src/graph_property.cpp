#include "blindtm/graph_property.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <vector>

namespace blindtm {

GraphProperty GraphProperty::always_true()
{
    return {"always-true", [](const Graph&) { return true; }};
}

GraphProperty GraphProperty::connected()
{
    return {"connected", [](const Graph& g) {
                if (g.order() == 0)
                    return true;
                std::vector<bool> seen(g.order() + 1, false);
                std::vector<Vertex> stack{1};
                seen[1] = true;
                int reached = 1;
                while (!stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    for (auto u : g.neighbors(v))
                        if (!seen[u]) {
                            seen[u] = true;
                            ++reached;
                            stack.push_back(u);
                        }
                }
                return reached == g.order();
            }};
}

GraphProperty GraphProperty::clique()
{
    return {"clique", [](const Graph& g) {
                long long n = g.order();
                return g.size() == n * (n - 1) / 2;
            }};
}

GraphProperty GraphProperty::independent()
{
    return {"independent", [](const Graph& g) { return g.size() == 0; }};
}

GraphProperty GraphProperty::regular(int r)
{
    return {"regular:" + std::to_string(r), [r](const Graph& g) {
                for (Vertex v = 1; v <= g.order(); ++v)
                    if (g.degree(v) != r)
                        return false;
                return true;
            }};
}

GraphProperty GraphProperty::custom(std::string name, Predicate predicate)
{
    return {std::move(name), std::move(predicate)};
}

GraphProperty parse_property(std::string_view text)
{
    if (text == "always-true")
        return GraphProperty::always_true();
    if (text == "connected")
        return GraphProperty::connected();
    if (text == "clique")
        return GraphProperty::clique();
    if (text == "independent")
        return GraphProperty::independent();
    for (std::string_view prefix : {"regular:", "r-regular:"}) {
        if (text.substr(0, prefix.size()) == prefix) {
            auto r = text::parse_int(std::string(text.substr(prefix.size())), 0, "regularity");
            if (r < 0 || r > 1'000'000)
                throw ParseError(0, "regularity out of range");
            return GraphProperty::regular(static_cast<int>(r));
        }
    }
    throw ParseError(0, "unknown graph property '" + std::string(text) + "'");
}

} // namespace blindtm
