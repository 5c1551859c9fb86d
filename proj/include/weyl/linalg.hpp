// Sparse exact-rational matrices and rank certification by fraction-free
// (Bareiss) elimination. Rows are cleared to integers first; every elimination
// step divides exactly by the previous pivot, which is asserted rather than
// assumed. No floating point anywhere.

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

// Rows are sparse vectors (column -> coefficient), columns 0..cols-1.
class RationalMatrix {
public:
    using sparse_row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }
    const sparse_row& row(std::size_t i) const { return rows_.at(i); }

    void set(std::size_t i, std::size_t j, const Rational& value) {
        if (j >= cols_) throw std::out_of_range("RationalMatrix::set: column out of range");
        auto& row = rows_.at(i);
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& entry, std::size_t col) { return entry.first < col; });
        if (it != row.end() && it->first == j) {
            if (value == 0)
                row.erase(it);
            else
                it->second = value;
        } else if (value != 0) {
            row.insert(it, {j, value});
        }
    }

    Rational get(std::size_t i, std::size_t j) const {
        const auto& row = rows_.at(i);
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& entry, std::size_t col) { return entry.first < col; });
        return (it != row.end() && it->first == j) ? it->second : Rational(0);
    }

private:
    std::size_t cols_ = 0;
    std::vector<sparse_row> rows_;
};

namespace detail {

using int_row = std::vector<std::pair<std::size_t, Integer>>;

inline Integer exact_div(const Integer& value, const Integer& divisor) {
    Integer quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    if (remainder != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return quotient;
}

// Clear denominators: multiply the row by the lcm of its denominators.
inline int_row clear_row(const RationalMatrix::sparse_row& row) {
    Integer lcm(1);
    for (const auto& [col, value] : row) {
        Integer den = value.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    int_row cleared;
    cleared.reserve(row.size());
    for (const auto& [col, value] : row)
        cleared.emplace_back(col, Integer(value.get_num() * (lcm / value.get_den())));
    return cleared;
}

}  // namespace detail

// Exact rank. Each step picks the sparsest row with the leftmost leading
// column as pivot and applies the Bareiss update
//   row <- (pivot * row - factor * pivot_row) / previous_pivot
// to every remaining row (factor may be zero; the rescale still applies).
inline std::size_t rank(const RationalMatrix& matrix) {
    std::vector<detail::int_row> active;
    active.reserve(matrix.row_count());
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
        auto cleared = detail::clear_row(matrix.row(i));
        if (!cleared.empty()) active.push_back(std::move(cleared));
    }

    std::size_t rank_count = 0;
    Integer previous_pivot(1);
    while (!active.empty()) {
        std::size_t pivot_index = 0;
        for (std::size_t i = 1; i < active.size(); ++i) {
            const auto lead = active[i].front().first;
            const auto best = active[pivot_index].front().first;
            if (lead < best || (lead == best && active[i].size() < active[pivot_index].size()))
                pivot_index = i;
        }
        detail::int_row pivot_row = std::move(active[pivot_index]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_index));
        const std::size_t pivot_col = pivot_row.front().first;
        const Integer pivot = pivot_row.front().second;
        ++rank_count;

        std::vector<detail::int_row> next;
        next.reserve(active.size());
        for (auto& row : active) {
            auto factor_it = std::lower_bound(
                row.begin(), row.end(), pivot_col,
                [](const auto& entry, std::size_t col) { return entry.first < col; });
            const bool hits = factor_it != row.end() && factor_it->first == pivot_col;
            detail::int_row updated;
            if (!hits) {
                updated.reserve(row.size());
                for (auto& [col, value] : row)
                    updated.emplace_back(col, detail::exact_div(pivot * value, previous_pivot));
            } else {
                const Integer factor = factor_it->second;
                updated.reserve(row.size() + pivot_row.size());
                auto a = row.begin();
                auto b = pivot_row.begin();
                while (a != row.end() || b != pivot_row.end()) {
                    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
                        updated.emplace_back(a->first,
                                             detail::exact_div(pivot * a->second, previous_pivot));
                        ++a;
                    } else if (a == row.end() || b->first < a->first) {
                        updated.emplace_back(b->first,
                                             detail::exact_div(-factor * b->second, previous_pivot));
                        ++b;
                    } else {
                        Integer value =
                            detail::exact_div(pivot * a->second - factor * b->second, previous_pivot);
                        if (value != 0) updated.emplace_back(a->first, std::move(value));
                        ++a;
                        ++b;
                    }
                }
            }
            if (!updated.empty()) next.push_back(std::move(updated));
        }
        active = std::move(next);
        previous_pivot = pivot;
    }
    return rank_count;
}

}  // namespace weyl
