#pragma once

#include <cstddef>
#include <vector>

#include "iprn/rational.hpp"

namespace iprn {

// Dense exact-rational matrix, row-major. Immutable in spirit: every
// operation returns a new value.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw Error("matrix must have at least one row and column");
    }
    RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> grid);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool row_is_zero(std::size_t i) const;

    // row . x with exact arithmetic
    Rational apply_row(std::size_t i, const std::vector<Rational>& x) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    bool operator==(const RationalMatrix& o) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

struct ValidationReport {
    bool admissible = true;
    std::vector<std::size_t> zero_rows;
    std::vector<std::pair<std::size_t, std::size_t>> negative_entries;
    std::vector<std::pair<std::size_t, std::size_t>> non_integral_entries;
};

struct FirstEntriesViolation {
    std::size_t row_i;
    std::size_t row_j;       // == row_i for a zero-row violation
    std::size_t shared_min_column;
    bool zero_row = false;
    bool operator==(const FirstEntriesViolation&) const = default;
};

struct FirstEntriesReport {
    bool satisfies = false;
    bool monic = false;
    std::vector<Rational> first_entries;  // sorted, unique
    std::vector<FirstEntriesViolation> violations;
};

ValidationReport validate(const RationalMatrix& m);

// First entries condition: rows sharing a leftmost-nonzero column must carry
// the same positive value there. Monic when every first entry is 1.
FirstEntriesReport check_first_entries(const RationalMatrix& m);

// Deduplicate rows, preserving first occurrence order.
RationalMatrix dedup_rows(const RationalMatrix& m);

// Block diagonal (A O; O B).
RationalMatrix diag_sum(const RationalMatrix& a, const RationalMatrix& b);

struct ColumnDropResult {
    RationalMatrix matrix;
    std::vector<std::size_t> column_map;  // result column -> original column
};

// Remove all-zero columns; errors if every column is zero.
ColumnDropResult drop_irrelevant_columns(const RationalMatrix& m);

}  // namespace iprn
