#ifndef HSOMOS_HANKEL_HPP
#define HSOMOS_HANKEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hsomos/cf_engine.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/power_series.hpp>
#include <hsomos/rational.hpp>

namespace hsomos
{

// Dense square matrix of rationals, row-major. Size 0 is the empty matrix.
class RationalMatrix
{
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n) : m_size(n), m_entries(n * n) {}
    explicit RationalMatrix(const std::vector<std::vector<Rational>> &rows) : RationalMatrix(rows.size())
    {
        for (std::size_t i = 0; i < m_size; ++i) {
            if (rows[i].size() != m_size) {
                throw error("matrix rows must all have length " + std::to_string(m_size));
            }
            for (std::size_t j = 0; j < m_size; ++j) {
                (*this)(i, j) = rows[i][j];
            }
        }
    }

    std::size_t size() const noexcept
    {
        return m_size;
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return m_entries[i * m_size + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return m_entries[i * m_size + j];
    }

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
    std::size_t m_size = 0;
    std::vector<Rational> m_entries;
};

// (s_{i+j})_{0 <= i, j < n}.
inline RationalMatrix hankel_matrix(const PowerSeries &s, std::size_t n)
{
    if (n > 0 && s.order() < 2 * n - 2) {
        throw insufficient_order("Hankel matrix of size " + std::to_string(n) + " needs series order "
                                 + std::to_string(2 * n - 2) + ", got " + std::to_string(s.order()));
    }
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = s[i + j];
        }
    }
    return m;
}

// Exact determinant by fraction-free (Bareiss) elimination.
//
// Each row is first multiplied by the lcm of its denominators so the working
// matrix is integral; the scale factors are divided out at the end. Every
// division inside the elimination is exact.
inline Rational det_bareiss(const RationalMatrix &m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return Rational(1);
    }
    std::vector<std::vector<Integer>> w(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer den = m(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
        }
        scale *= l;
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && w[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return Rational(0);
            }
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    Integer det = w[n - 1][n - 1];
    if (sign < 0) {
        det = -det;
    }
    return Rational(det, scale);
}

namespace detail
{

inline Rational cofactor_det(const RationalMatrix &m, std::vector<std::size_t> &cols, std::size_t row)
{
    const std::size_t n = m.size();
    if (row == n) {
        return Rational(1);
    }
    Rational total;
    int sign = 1;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const std::size_t c = cols[idx];
        if (!m(row, c).is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
            const Rational minor = cofactor_det(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
            if (sign > 0) {
                total += m(row, c) * minor;
            } else {
                total -= m(row, c) * minor;
            }
        }
        sign = -sign;
    }
    return total;
}

} // namespace detail

inline constexpr std::size_t det_naive_max_size = 7;

// Laplace expansion along the first row. Factorial cost; oracle only.
inline Rational det_naive(const RationalMatrix &m)
{
    if (m.size() > det_naive_max_size) {
        throw too_large("cofactor expansion limited to size " + std::to_string(det_naive_max_size));
    }
    std::vector<std::size_t> cols(m.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cols[j] = j;
    }
    return detail::cofactor_det(m, cols, 0);
}

// H_0, ..., H_{n_max}.
inline std::vector<Rational> hankel_transform(const PowerSeries &s, std::size_t n_max)
{
    if (n_max > 0 && s.order() < 2 * n_max - 2) {
        throw insufficient_order("Hankel transform through n = " + std::to_string(n_max) + " needs series order "
                                 + std::to_string(2 * n_max - 2) + ", got " + std::to_string(s.order()));
    }
    std::vector<Rational> h;
    h.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        h.push_back(det_bareiss(hankel_matrix(s, n)));
    }
    return h;
}

struct OrbitHankel {
    std::vector<Rational> values;
    std::optional<std::size_t> breakdown;
};

// H_n = a_0^n a_1^{n-1} ... a_{n-1} from the tau orbit. If a_m = 0 only
// H_0, ..., H_m are produced.
inline OrbitHankel hankel_via_orbit(const CFParams &p, std::size_t n_max)
{
    if (p.a.is_zero()) {
        throw zero_leading_coefficient("orbit product needs a != 0");
    }
    const auto orbit = tau_orbit(p, n_max == 0 ? 0 : n_max - 1);
    OrbitHankel out;
    out.breakdown = orbit.breakdown;
    out.values.push_back(Rational(1));
    // H_n = H_{n-1} * (a_0 a_1 ... a_{n-1}).
    Rational running_product(1);
    for (std::size_t n = 1; n <= n_max && n - 1 < orbit.size(); ++n) {
        running_product *= orbit.a(n - 1);
        out.values.push_back(out.values.back() * running_product);
    }
    return out;
}

} // namespace hsomos

#endif
