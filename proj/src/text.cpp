#include "blindtm/text.hpp"

#include "blindtm/errors.hpp"

#include <charconv>
#include <sstream>

namespace blindtm::text {

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        for (std::string tok; in >> tok;)
            line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

long long parse_int(const std::string& token, int line, const char* what)
{
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + token + "'");
    return value;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto end = s.find(sep, pos);
        parts.emplace_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return parts;
}

} // namespace blindtm::text
