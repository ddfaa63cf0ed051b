#include "blindtm/fq_matrix.hpp"

#include "blindtm/errors.hpp"
#include "blindtm/text.hpp"

#include <sstream>
#include <stdexcept>

namespace blindtm {

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

FqMatrix::FqMatrix(int q, int rows, int cols, std::vector<int> entries)
    : q_(q), rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (!is_prime(q))
        throw std::invalid_argument("field order " + std::to_string(q) + " is not prime");
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw std::invalid_argument("matrix entry count does not match dimensions");
    for (int e : entries_)
        if (e < 0 || e >= q)
            throw std::invalid_argument("matrix entry " + std::to_string(e) + " not in [0, q)");
}

int FqMatrix::at(int row, int col) const
{
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
}

int FqMatrix::row_sum(int row) const
{
    int sum = 0;
    for (int col = 1; col <= cols_; ++col)
        sum = (sum + at(row, col)) % q_;
    return sum;
}

FqMatrix parse_matrix(std::string_view text)
{
    auto lines = text::tokenize(text);
    if (lines.empty())
        throw ParseError(0, "empty input, expected 'matrix <q> <m> <n>'");
    const auto& head = lines.front();
    if (head.tokens.size() != 4 || head.tokens[0] != "matrix")
        throw ParseError(head.number, "expected 'matrix <q> <m> <n>'");
    auto q = text::parse_int(head.tokens[1], head.number, "q");
    auto m = text::parse_int(head.tokens[2], head.number, "row count");
    auto n = text::parse_int(head.tokens[3], head.number, "column count");
    if (q < 2 || q > 1'000'000 || !is_prime(static_cast<int>(q)))
        throw ParseError(head.number, "q must be a prime");
    if (m < 0 || n < 0 || m > 10'000 || n > 10'000)
        throw ParseError(head.number, "matrix dimensions out of range");
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " matrix rows");

    std::vector<int> entries;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (line.tokens.size() != static_cast<std::size_t>(n))
            throw ParseError(line.number, "expected " + std::to_string(n) + " entries");
        for (const auto& tok : line.tokens) {
            auto e = text::parse_int(tok, line.number, "entry");
            if (e < 0 || e >= q)
                throw ParseError(line.number, "entry " + tok + " not in [0, q)");
            entries.push_back(static_cast<int>(e));
        }
    }
    return FqMatrix(static_cast<int>(q), static_cast<int>(m), static_cast<int>(n), std::move(entries));
}

std::string serialize_matrix(const FqMatrix& h)
{
    std::ostringstream out;
    out << "matrix " << h.field_order() << ' ' << h.rows() << ' ' << h.cols() << '\n';
    for (int r = 1; r <= h.rows(); ++r) {
        for (int c = 1; c <= h.cols(); ++c)
            out << (c > 1 ? " " : "") << h.at(r, c);
        out << '\n';
    }
    return out.str();
}

} // namespace blindtm
