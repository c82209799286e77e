#include "iprn/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace iprn {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> grid)
    : rows_(grid.size()), cols_(grid.size() ? grid.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw Error("matrix must have at least one row and column");
    data_.reserve(rows_ * cols_);
    for (const auto& r : grid) {
        if (r.size() != cols_) throw Error("ragged initializer");
        for (auto v : r) data_.emplace_back(v);
    }
}

bool RationalMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

Rational RationalMatrix::apply_row(std::size_t i, const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw Error("vector length does not match column count");
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    return acc;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(apply_row(i, x));
    return out;
}

ValidationReport validate(const RationalMatrix& m) {
    ValidationReport rep;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row_is_zero(i)) rep.zero_rows.push_back(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_negative()) rep.negative_entries.emplace_back(i, j);
            if (!m.at(i, j).is_integer()) rep.non_integral_entries.emplace_back(i, j);
        }
    }
    rep.admissible = rep.zero_rows.empty() && rep.negative_entries.empty();
    return rep;
}

FirstEntriesReport check_first_entries(const RationalMatrix& m) {
    FirstEntriesReport rep;
    std::vector<std::optional<std::size_t>> first_col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) {
                first_col[i] = j;
                break;
            }
        }
        if (!first_col[i]) rep.violations.push_back({i, i, 0, /*zero_row=*/true});
    }

    bool ok = rep.violations.empty();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!first_col[i]) continue;
        const Rational& c = m.at(i, *first_col[i]);
        if (!c.is_positive()) {
            ok = false;
            rep.violations.push_back({i, i, *first_col[i], false});
            continue;
        }
        rep.first_entries.push_back(c);
        for (std::size_t j = i + 1; j < m.rows(); ++j) {
            if (first_col[j] && *first_col[j] == *first_col[i] &&
                m.at(j, *first_col[j]) != c) {
                ok = false;
                rep.violations.push_back({i, j, *first_col[i], false});
            }
        }
    }

    std::sort(rep.first_entries.begin(), rep.first_entries.end());
    rep.first_entries.erase(std::unique(rep.first_entries.begin(), rep.first_entries.end()),
                            rep.first_entries.end());
    rep.satisfies = ok;
    rep.monic = ok && rep.first_entries.size() == 1 && rep.first_entries[0] == Rational(1);
    return rep;
}

RationalMatrix dedup_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> seen;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
            seen.push_back(std::move(r));
            keep.push_back(i);
        }
    }
    RationalMatrix out(keep.size(), m.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(keep[i], j);
    return out;
}

RationalMatrix diag_sum(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

ColumnDropResult drop_irrelevant_columns(const RationalMatrix& m) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!m.at(i, j).is_zero()) {
                keep.push_back(j);
                break;
            }
        }
    }
    if (keep.empty()) throw Error("all columns are zero");
    RationalMatrix out(m.rows(), keep.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = m.at(i, keep[j]);
    return {std::move(out), std::move(keep)};
}

}  // namespace iprn
