#ifndef HSOMOS_DETAIL_LINEAR_SOLVE_HPP
#define HSOMOS_DETAIL_LINEAR_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <hsomos/rational.hpp>

namespace hsomos::detail
{

struct LinearSolution {
    std::vector<Rational> x;
    std::size_t rank = 0;
};

// Solves the (possibly over- or under-determined) system A x = rhs exactly.
// Columns are eliminated left to right; the first row with a nonzero entry
// becomes the pivot. Free variables are set to zero. Returns nothing if the
// system is inconsistent.
inline std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs,
                                                  std::size_t cols)
{
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) {
            a[r][j] *= inv;
        }
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) {
                continue;
            }
            const Rational factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= factor * a[r][j];
            }
            rhs[i] -= factor * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!rhs[i].is_zero()) {
            return std::nullopt;
        }
    }
    LinearSolution sol;
    sol.x.assign(cols, Rational(0));
    sol.rank = r;
    // Reduced row echelon form with free variables at zero: each pivot
    // variable reads off its right-hand side directly.
    for (std::size_t i = 0; i < r; ++i) {
        sol.x[pivot_col[i]] = rhs[i];
    }
    return sol;
}

} // namespace hsomos::detail

#endif
