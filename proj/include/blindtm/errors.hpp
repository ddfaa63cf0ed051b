#pragma once

#include <stdexcept>
#include <string>

namespace blindtm {

/// Malformed input text. Carries the 1-based line number of the offending line
/// (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An enumeration or search exceeded its resource guard. Never a verdict.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested combination of options is not offered.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace blindtm
