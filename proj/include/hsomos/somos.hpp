#ifndef HSOMOS_SOMOS_HPP
#define HSOMOS_SOMOS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <hsomos/detail/linear_solve.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/rational.hpp>

namespace hsomos
{

// s_n s_{n-4} = alpha s_{n-1} s_{n-3} + beta s_{n-2}^2.
struct Somos4Params {
    Rational alpha, beta;

    friend bool operator==(const Somos4Params &, const Somos4Params &) = default;
};

struct SomosSequence {
    std::vector<Rational> values;
    // Index n whose divisor s_{n-4} vanished; values stop at n - 1.
    std::optional<std::size_t> breakdown;
};

// s_0, ..., s_{n_max} from four seed values.
inline SomosSequence somos4_generate(const Somos4Params &p, const std::array<Rational, 4> &seed, std::size_t n_max)
{
    SomosSequence out;
    auto &s = out.values;
    for (std::size_t n = 0; n <= n_max && n < 4; ++n) {
        s.push_back(seed[n]);
    }
    for (std::size_t n = 4; n <= n_max; ++n) {
        if (s[n - 4].is_zero()) {
            out.breakdown = n;
            break;
        }
        s.push_back((p.alpha * s[n - 1] * s[n - 3] + p.beta * s[n - 2] * s[n - 2]) / s[n - 4]);
    }
    return out;
}

// Division-free residuals s_n s_{n-4} - alpha s_{n-1} s_{n-3} - beta s_{n-2}^2
// for n = 4, ..., size - 1. Entry k belongs to n = k + 4.
inline std::vector<Rational> somos4_residuals(std::span<const Rational> s, const Somos4Params &p)
{
    if (s.size() < 5) {
        throw too_short("Somos-4 residuals need at least 5 terms, got " + std::to_string(s.size()));
    }
    std::vector<Rational> r;
    r.reserve(s.size() - 4);
    for (std::size_t n = 4; n < s.size(); ++n) {
        r.push_back(s[n] * s[n - 4] - p.alpha * s[n - 1] * s[n - 3] - p.beta * s[n - 2] * s[n - 2]);
    }
    return r;
}

struct SomosFit {
    Somos4Params params;
    // Set when the data do not pin (alpha, beta) down; params is then one
    // representative of the solution set (free coordinates at zero).
    bool degenerate = false;
};

// Recovers (alpha, beta) from a sequence of at least 8 terms. Returns
// nothing if no pair fits every relation.
inline std::optional<SomosFit> somos4_fit(std::span<const Rational> s)
{
    if (s.size() < 8) {
        return std::nullopt;
    }
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t n = 4; n < s.size(); ++n) {
        rows.push_back({s[n - 1] * s[n - 3], s[n - 2] * s[n - 2]});
        rhs.push_back(s[n] * s[n - 4]);
    }
    const auto sol = detail::solve_linear(std::move(rows), std::move(rhs), 2);
    if (!sol) {
        return std::nullopt;
    }
    return SomosFit{{sol->x[0], sol->x[1]}, sol->rank < 2};
}

} // namespace hsomos

#endif
