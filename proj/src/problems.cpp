#include "blindtm/problems.hpp"

#include "blindtm/errors.hpp"

namespace blindtm {

bool CardinalityMode::admits(int size, int n) const noexcept
{
    switch (kind) {
    case Kind::AtMost: return size <= k;
    case Kind::AtLeastNMinusK: return size >= n - k;
    case Kind::Exactly: return size == k;
    case Kind::ExactlyNMinusK: return size == n - k;
    }
    return false;
}

CardinalityMode::Kind parse_cardinality(std::string_view text)
{
    if (text == "at-most")
        return CardinalityMode::Kind::AtMost;
    if (text == "at-least-n-minus")
        return CardinalityMode::Kind::AtLeastNMinusK;
    if (text == "exactly")
        return CardinalityMode::Kind::Exactly;
    if (text == "exactly-n-minus")
        return CardinalityMode::Kind::ExactlyNMinusK;
    throw ParseError(0, "unknown cardinality mode '" + std::string(text) + "'");
}

std::string to_string(CardinalityMode::Kind kind)
{
    switch (kind) {
    case CardinalityMode::Kind::AtMost: return "at-most";
    case CardinalityMode::Kind::AtLeastNMinusK: return "at-least-n-minus";
    case CardinalityMode::Kind::Exactly: return "exactly";
    case CardinalityMode::Kind::ExactlyNMinusK: return "exactly-n-minus";
    }
    return "?";
}

CodeMode parse_code_mode(std::string_view text)
{
    if (text == "min-distance")
        return CodeMode::MinDistance;
    if (text == "weight-distribution")
        return CodeMode::WeightDistribution;
    throw ParseError(0, "unknown code mode '" + std::string(text) + "'");
}

std::string to_string(CodeMode mode)
{
    return mode == CodeMode::MinDistance ? "min-distance" : "weight-distribution";
}

} // namespace blindtm
