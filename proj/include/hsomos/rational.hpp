#ifndef HSOMOS_RATIONAL_HPP
#define HSOMOS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <hsomos/errors.hpp>

namespace hsomos
{

using Integer = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational
{
public:
    Rational() = default;
    Rational(int n) : m_q(n) {}
    Rational(long n) : m_q(n) {}
    Rational(long long n) : m_q(static_cast<long>(n))
    {
        static_assert(sizeof(long) == sizeof(long long), "LP64 data model expected");
    }
    explicit Rational(const Integer &n) : m_q(n) {}

    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            throw zero_divisor("rational with zero denominator");
        }
        m_q = mpq_class(num, den);
        m_q.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p", "-p", "p/q" and "-p/q".
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto bad = [&] { return error("malformed rational '" + s + "'"); };
        if (s.empty()) {
            throw bad();
        }
        const auto slash = s.find('/');
        auto check_int = [&](const std::string &part, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
                i = 1;
            }
            if (i >= part.size()) {
                throw bad();
            }
            for (; i < part.size(); ++i) {
                if (part[i] < '0' || part[i] > '9') {
                    throw bad();
                }
            }
        };
        std::string num = s.substr(0, slash);
        check_int(num, true);
        if (!num.empty() && num[0] == '+') {
            num.erase(0, 1);
        }
        if (slash == std::string::npos) {
            return Rational(Integer(num));
        }
        const std::string den = s.substr(slash + 1);
        check_int(den, false);
        return Rational(Integer(num), Integer(den));
    }

    Integer numerator() const
    {
        return m_q.get_num();
    }
    Integer denominator() const
    {
        return m_q.get_den();
    }

    bool is_zero() const
    {
        return sgn(m_q) == 0;
    }
    bool is_integer() const
    {
        return m_q.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_q);
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        return m_q.get_str();
    }
    // Always "p/q", including q = 1.
    std::string fraction_str() const
    {
        return m_q.get_num().get_str() + "/" + m_q.get_den().get_str();
    }

    const mpq_class &raw() const
    {
        return m_q;
    }

    Rational &operator+=(const Rational &o)
    {
        m_q += o.m_q;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_q -= o.m_q;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_q *= o.m_q;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw zero_divisor("division by zero");
        }
        m_q /= o.m_q;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.m_q = -a.m_q;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_q == b.m_q;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_q, b.m_q);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q)
    {
        return os << q.str();
    }

private:
    mpq_class m_q;
};

inline Rational pow(Rational base, unsigned exponent)
{
    Rational result(1);
    while (exponent != 0u) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent != 0u) {
            base *= base;
        }
    }
    return result;
}

} // namespace hsomos

#endif
