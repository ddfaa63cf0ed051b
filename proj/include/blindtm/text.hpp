#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace blindtm::text {

/// One non-empty logical line with comments stripped, split on whitespace.
struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

/// Splits `text` into tokenized lines, dropping blank lines and '#' comments.
std::vector<Line> tokenize(std::string_view text);

/// Parses a decimal integer token; throws ParseError mentioning `what`.
long long parse_int(const std::string& token, int line, const char* what);

std::vector<std::string> split(std::string_view s, char sep);

} // namespace blindtm::text
