#pragma once

#include "blindtm/graph.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace blindtm {

/// A decision predicate on (small) graphs, identified by name.
class GraphProperty {
public:
    using Predicate = std::function<bool(const Graph&)>;

    static GraphProperty always_true();
    /// The empty graph counts as connected.
    static GraphProperty connected();
    static GraphProperty clique();
    static GraphProperty independent();
    /// Every vertex has degree exactly r; vacuously true on the empty graph.
    static GraphProperty regular(int r);
    static GraphProperty custom(std::string name, Predicate predicate);

    const std::string& name() const noexcept { return name_; }
    bool operator()(const Graph& g) const { return predicate_(g); }

private:
    GraphProperty(std::string name, Predicate predicate) : name_(std::move(name)), predicate_(std::move(predicate)) {}

    std::string name_;
    Predicate predicate_;
};

inline bool check_property(const GraphProperty& p, const Graph& g) { return p(g); }

/// `always-true | connected | clique | independent | regular:<r>`.
/// Throws ParseError for unknown names.
GraphProperty parse_property(std::string_view text);

} // namespace blindtm
