#include "blindtm/int_set.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace blindtm {

namespace {

void check_bound(int bound)
{
    if (bound < 0)
        throw std::invalid_argument("set bound must be nonnegative");
}

std::vector<int> normalized(std::vector<int> values)
{
    for (int v : values)
        if (v < 0)
            throw std::invalid_argument("set elements must be nonnegative");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace

IntSetSpec IntSetSpec::all(int bound)
{
    check_bound(bound);
    return {Kind::All, bound};
}

IntSetSpec IntSetSpec::positive(int bound)
{
    check_bound(bound);
    return {Kind::Positive, bound};
}

IntSetSpec IntSetSpec::even(int bound)
{
    check_bound(bound);
    return {Kind::Even, bound};
}

IntSetSpec IntSetSpec::odd(int bound)
{
    check_bound(bound);
    return {Kind::Odd, bound};
}

IntSetSpec IntSetSpec::finite(std::vector<int> members, int bound)
{
    check_bound(bound);
    IntSetSpec s{Kind::Finite, bound};
    s.values_ = normalized(std::move(members));
    return s;
}

IntSetSpec IntSetSpec::cofinite(std::vector<int> excluded, int bound)
{
    check_bound(bound);
    IntSetSpec s{Kind::Cofinite, bound};
    s.values_ = normalized(std::move(excluded));
    return s;
}

IntSetSpec IntSetSpec::at_least(int threshold, int bound)
{
    check_bound(bound);
    if (threshold < 0)
        throw std::invalid_argument("threshold must be nonnegative");
    IntSetSpec s{Kind::AtLeast, bound};
    s.threshold_ = threshold;
    return s;
}

IntSetSpec IntSetSpec::char_vector(std::vector<bool> bits)
{
    if (bits.empty())
        throw std::invalid_argument("characteristic vector must cover at least 0");
    IntSetSpec s{Kind::CharVector, static_cast<int>(bits.size()) - 1};
    s.bits_ = std::move(bits);
    return s;
}

bool IntSetSpec::contains(int x) const
{
    if (x < 0 || x > bound_)
        throw std::out_of_range("membership query " + std::to_string(x) + " outside [0, " + std::to_string(bound_) + "]");
    switch (kind_) {
    case Kind::All:
        return true;
    case Kind::Positive:
        return x > 0;
    case Kind::Even:
        return x % 2 == 0;
    case Kind::Odd:
        return x % 2 == 1;
    case Kind::Finite:
        return std::binary_search(values_.begin(), values_.end(), x);
    case Kind::Cofinite:
        return !std::binary_search(values_.begin(), values_.end(), x);
    case Kind::AtLeast:
        return x >= threshold_;
    case Kind::CharVector:
        return bits_[static_cast<std::size_t>(x)];
    }
    return false;
}

IntSetSpec IntSetSpec::with_bound(int bound) const
{
    check_bound(bound);
    IntSetSpec s = *this;
    if (kind_ == Kind::CharVector) {
        if (bound > bound_)
            throw std::invalid_argument("characteristic vector only covers [0, " + std::to_string(bound_) + "]");
        s.bits_.resize(static_cast<std::size_t>(bound) + 1);
    }
    s.bound_ = bound;
    return s;
}

std::string IntSetSpec::to_string() const
{
    auto join = [](const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? "," : "") + std::to_string(v[i]);
        return out;
    };
    switch (kind_) {
    case Kind::All:
        return "all";
    case Kind::Positive:
        return "positive";
    case Kind::Even:
        return "even";
    case Kind::Odd:
        return "odd";
    case Kind::Finite:
        return "finite:" + join(values_);
    case Kind::Cofinite:
        return "cofinite:" + join(values_);
    case Kind::AtLeast:
        return "geq:" + std::to_string(threshold_);
    case Kind::CharVector: {
        std::string bits;
        for (bool b : bits_)
            bits += b ? '1' : '0';
        return "vector:" + bits;
    }
    }
    return {};
}

IntSetSpec parse_int_set(std::string_view text, int bound)
{
    auto colon = text.find(':');
    std::string head(text.substr(0, colon));
    std::string tail = colon == std::string_view::npos ? std::string() : std::string(text.substr(colon + 1));
    bool has_arg = colon != std::string_view::npos;

    auto numbers = [&]() {
        std::vector<int> values;
        if (tail.empty())
            return values;
        for (const auto& part : text::split(tail, ',')) {
            auto v = text::parse_int(part, 0, "set element");
            if (v < 0 || v > 1'000'000)
                throw ParseError(0, "set element out of range: " + part);
            values.push_back(static_cast<int>(v));
        }
        return values;
    };

    if (!has_arg) {
        if (head == "all")
            return IntSetSpec::all(bound);
        if (head == "positive")
            return IntSetSpec::positive(bound);
        if (head == "even")
            return IntSetSpec::even(bound);
        if (head == "odd")
            return IntSetSpec::odd(bound);
    } else {
        if (head == "finite")
            return IntSetSpec::finite(numbers(), bound);
        if (head == "cofinite")
            return IntSetSpec::cofinite(numbers(), bound);
        if (head == "geq") {
            auto t = text::parse_int(tail, 0, "threshold");
            if (t < 0 || t > 1'000'000)
                throw ParseError(0, "threshold out of range");
            return IntSetSpec::at_least(static_cast<int>(t), bound);
        }
        if (head == "vector") {
            if (tail.empty())
                throw ParseError(0, "empty characteristic vector");
            std::vector<bool> bits;
            for (char c : tail) {
                if (c != '0' && c != '1')
                    throw ParseError(0, "characteristic vector must be a bit string");
                bits.push_back(c == '1');
            }
            return IntSetSpec::char_vector(std::move(bits));
        }
    }
    throw ParseError(0, "unknown set specification '" + std::string(text) + "'");
}

} // namespace blindtm
