#pragma once

#include <string>
#include <string_view>

namespace blindtm {

/// Cardinality constraint on the solution set. The dual kinds bound the size
/// of the complement: at least / exactly n - k elements.
struct CardinalityMode {
    enum class Kind { AtMost, AtLeastNMinusK, Exactly, ExactlyNMinusK };

    Kind kind = Kind::AtMost;
    int k = 0;

    static CardinalityMode at_most(int k) { return {Kind::AtMost, k}; }
    static CardinalityMode at_least_n_minus(int k) { return {Kind::AtLeastNMinusK, k}; }
    static CardinalityMode exactly(int k) { return {Kind::Exactly, k}; }
    static CardinalityMode exactly_n_minus(int k) { return {Kind::ExactlyNMinusK, k}; }

    bool dual() const noexcept { return kind == Kind::AtLeastNMinusK || kind == Kind::ExactlyNMinusK; }
    bool exact() const noexcept { return kind == Kind::Exactly || kind == Kind::ExactlyNMinusK; }
    /// Whether a solution of size `size` out of `n` elements is allowed.
    bool admits(int size, int n) const noexcept;

    friend bool operator==(const CardinalityMode&, const CardinalityMode&) = default;
};

/// `at-most | at-least-n-minus | exactly | exactly-n-minus`; throws ParseError.
CardinalityMode::Kind parse_cardinality(std::string_view text);
std::string to_string(CardinalityMode::Kind kind);

/// MinDistance: a nonempty set of at most k columns summing to zero.
/// WeightDistribution: exactly k columns summing to zero.
enum class CodeMode { MinDistance, WeightDistribution };

/// `min-distance | weight-distribution`; throws ParseError.
CodeMode parse_code_mode(std::string_view text);
std::string to_string(CodeMode mode);

} // namespace blindtm
