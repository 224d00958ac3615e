#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline std::size_t weight(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t weight(const RatFun& x) { return x.num().size() + x.den().size(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RatFun& x) { return x.is_zero(); }

} // namespace detail

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are chosen by smallest size to limit swell.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t r = row; r < a.size(); ++r) {
            if (detail::is_zero(a[r][col])) continue;
            if (!best || detail::weight(a[r][col]) < detail::weight(a[*best][col])) best = r;
        }
        if (!best) continue;
        std::swap(a[row], a[*best]);
        T inv = T(1) / a[row][col];
        for (std::size_t c = col; c < ncols; ++c)
            if (!detail::is_zero(a[row][c])) a[row][c] = a[row][c] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || detail::is_zero(a[r][col])) continue;
            T f = a[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (!detail::is_zero(a[row][c])) a[r][c] = a[r][c] - f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of {x : a x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a, std::size_t ncols) {
    auto pivots = row_reduce(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(ncols, T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of a x = b, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, const std::vector<T>& b, std::size_t ncols) {
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    auto pivots = row_reduce(a, ncols + 1);
    std::vector<T> x(ncols, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == ncols) return std::nullopt;
        x[pivots[r]] = a[r][ncols];
    }
    return x;
}

} // namespace specpot
