#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace blindtm {

/// m x n parity-check matrix over the prime field F_q. Rows and columns are
/// 1-based, matching the column symbols h_1..h_n.
class FqMatrix {
public:
    FqMatrix() = default;

    /// `entries` is row-major, m*n values in [0, q). Throws std::invalid_argument
    /// if q is not prime or an entry is out of range.
    FqMatrix(int q, int rows, int cols, std::vector<int> entries);

    int field_order() const noexcept { return q_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int at(int row, int col) const;

    /// Sum of row `row` over all columns, reduced mod q.
    int row_sum(int row) const;

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
    int q_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> entries_;
};

bool is_prime(int q);

/// `matrix <q> <m> <n>` followed by m rows of n integers.
FqMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const FqMatrix& h);

} // namespace blindtm
