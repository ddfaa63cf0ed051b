#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace blindtm {

/// A set of nonnegative integers whose membership is decidable on [0, bound].
///
/// Constructions only ever consult small counts (at most max(k, max degree)),
/// so this stands in for an arbitrary recursive set. Querying past the bound
/// is a caller bug and throws std::out_of_range.
class IntSetSpec {
public:
    enum class Kind { All, Positive, Even, Odd, Finite, Cofinite, AtLeast, CharVector };

    static IntSetSpec all(int bound);
    static IntSetSpec positive(int bound);
    static IntSetSpec even(int bound);
    static IntSetSpec odd(int bound);
    static IntSetSpec finite(std::vector<int> members, int bound);
    static IntSetSpec cofinite(std::vector<int> excluded, int bound);
    static IntSetSpec at_least(int threshold, int bound);
    /// bits[i] is membership of i; the bound is bits.size() - 1.
    static IntSetSpec char_vector(std::vector<bool> bits);

    Kind kind() const noexcept { return kind_; }
    int bound() const noexcept { return bound_; }

    bool contains(int x) const;

    /// Same set, queried on [0, bound]. Character vectors cannot grow.
    IntSetSpec with_bound(int bound) const;

    /// Inverse of parse_int_set (up to the bound, which the text form omits
    /// except for vectors).
    std::string to_string() const;

    friend bool operator==(const IntSetSpec&, const IntSetSpec&) = default;

private:
    IntSetSpec(Kind kind, int bound) : kind_(kind), bound_(bound) {}

    Kind kind_ = Kind::All;
    int bound_ = 0;
    std::vector<int> values_;
    int threshold_ = 0;
    std::vector<bool> bits_;
};

/// Free-function form of IntSetSpec::contains.
inline bool membership(const IntSetSpec& s, int x) { return s.contains(x); }

/// `all | positive | even | odd | finite:c1,c2,... | cofinite:c1,... | geq:t | vector:<bits>`
/// Throws ParseError (line 0) on malformed text.
IntSetSpec parse_int_set(std::string_view text, int bound);

} // namespace blindtm
