#ifndef HSOMOS_GF_LANG_HPP
#define HSOMOS_GF_LANG_HPP

// A small language for generating functions given by self-referential
// equations such as
//
//     1/(1 - x*(1+r*x)/(1-x) - s*x^2*G)
//
// Grammar (whitespace is insignificant, '*' is never implicit):
//
//     expr     := term (("+" | "-") term)*
//     term     := factor (("*" | "/") factor)*
//     factor   := base ("^" uint)?
//     base     := rational | "x" | "G" | ident | "(" expr ")"
//     rational := uint ("/" uint)?
//     ident    := [a-z][a-z0-9_]*   (except "x")
//
// "G" stands for the series being defined. There is no unary minus.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <hsomos/errors.hpp>
#include <hsomos/power_series.hpp>
#include <hsomos/rational.hpp>

namespace hsomos
{

using Bindings = std::map<std::string, Rational>;

class GFExpr
{
public:
    enum class Kind { constant, variable, x, self_ref, add, sub, mul, div, pow };

    static GFExpr constant(Rational value)
    {
        Node n{Kind::constant};
        n.value = std::move(value);
        return GFExpr(std::move(n));
    }
    static GFExpr variable(std::string name)
    {
        Node n{Kind::variable};
        n.name = std::move(name);
        return GFExpr(std::move(n));
    }
    static GFExpr x()
    {
        return GFExpr(Node{Kind::x});
    }
    static GFExpr self_ref()
    {
        return GFExpr(Node{Kind::self_ref});
    }
    static GFExpr binary(Kind op, GFExpr lhs, GFExpr rhs)
    {
        if (op != Kind::add && op != Kind::sub && op != Kind::mul && op != Kind::div) {
            throw error("not a binary operator");
        }
        Node n{op};
        n.lhs = std::move(lhs.m_node);
        n.rhs = std::move(rhs.m_node);
        return GFExpr(std::move(n));
    }
    static GFExpr power(GFExpr base, unsigned exponent)
    {
        Node n{Kind::pow};
        n.lhs = std::move(base.m_node);
        n.exponent = exponent;
        return GFExpr(std::move(n));
    }

    Kind kind() const noexcept
    {
        return m_node->kind;
    }
    const Rational &value() const
    {
        return m_node->value;
    }
    const std::string &name() const
    {
        return m_node->name;
    }
    unsigned exponent() const
    {
        return m_node->exponent;
    }
    // Left operand of a binary node, or the base of a power.
    GFExpr lhs() const
    {
        return GFExpr(m_node->lhs);
    }
    GFExpr rhs() const
    {
        return GFExpr(m_node->rhs);
    }

    bool is_binary() const noexcept
    {
        const auto k = kind();
        return k == Kind::add || k == Kind::sub || k == Kind::mul || k == Kind::div;
    }

    bool contains_self_ref() const
    {
        switch (kind()) {
            case Kind::self_ref:
                return true;
            case Kind::pow:
                return lhs().contains_self_ref();
            default:
                return is_binary() && (lhs().contains_self_ref() || rhs().contains_self_ref());
        }
    }

    // Structural equality.
    friend bool operator==(const GFExpr &a, const GFExpr &b)
    {
        if (a.m_node == b.m_node) {
            return true;
        }
        if (a.kind() != b.kind()) {
            return false;
        }
        switch (a.kind()) {
            case Kind::constant:
                return a.value() == b.value();
            case Kind::variable:
                return a.name() == b.name();
            case Kind::x:
            case Kind::self_ref:
                return true;
            case Kind::pow:
                return a.exponent() == b.exponent() && a.lhs() == b.lhs();
            default:
                return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        }
    }

private:
    struct Node {
        explicit Node(Kind k) : kind(k) {}
        Kind kind;
        Rational value;
        std::string name;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
        unsigned exponent = 0;
    };

    explicit GFExpr(Node n) : m_node(std::make_shared<const Node>(std::move(n))) {}
    explicit GFExpr(std::shared_ptr<const Node> n) : m_node(std::move(n)) {}

    std::shared_ptr<const Node> m_node;
};

inline constexpr unsigned gf_max_exponent = 1000;

namespace detail
{

class GFParser
{
public:
    explicit GFParser(std::string_view text) : m_text(text) {}

    GFExpr parse()
    {
        auto e = expr();
        skip_ws();
        if (!at_end()) {
            throw syntax_error("unexpected '" + std::string(1, m_text[m_pos]) + "'", m_pos);
        }
        return e;
    }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;

    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    static bool is_space(char c)
    {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }
    static bool is_digit(char c)
    {
        return c >= '0' && c <= '9';
    }
    static bool is_lower(char c)
    {
        return c >= 'a' && c <= 'z';
    }
    static bool is_known(char c)
    {
        return is_space(c) || is_digit(c) || is_lower(c) || c == '_' || c == 'G' || c == '+' || c == '-'
               || c == '*' || c == '/' || c == '^' || c == '(' || c == ')';
    }
    void skip_ws()
    {
        while (!at_end() && is_space(m_text[m_pos])) {
            ++m_pos;
        }
        if (!at_end() && !is_known(m_text[m_pos])) {
            throw unknown_character(m_text[m_pos], m_pos);
        }
    }
    // Next non-space character, or '\0' at end of input.
    char peek()
    {
        skip_ws();
        return at_end() ? '\0' : m_text[m_pos];
    }

    std::string uint_digits()
    {
        const std::size_t start = m_pos;
        while (!at_end() && is_digit(m_text[m_pos])) {
            ++m_pos;
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    GFExpr expr()
    {
        auto lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++m_pos;
            lhs = GFExpr::binary(c == '+' ? GFExpr::Kind::add : GFExpr::Kind::sub, std::move(lhs), term());
        }
        return lhs;
    }

    GFExpr term()
    {
        auto lhs = factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++m_pos;
            lhs = GFExpr::binary(c == '*' ? GFExpr::Kind::mul : GFExpr::Kind::div, std::move(lhs), factor());
        }
        return lhs;
    }

    GFExpr factor()
    {
        auto b = base();
        if (peek() == '^') {
            ++m_pos;
            if (!is_digit(peek())) {
                throw syntax_error("expected exponent", m_pos);
            }
            const std::size_t start = m_pos;
            const auto digits = uint_digits();
            if (digits.size() > 4 || std::stoul(digits) > gf_max_exponent) {
                throw syntax_error("exponent exceeds " + std::to_string(gf_max_exponent), start);
            }
            b = GFExpr::power(std::move(b), static_cast<unsigned>(std::stoul(digits)));
        }
        return b;
    }

    GFExpr base()
    {
        const char c = peek();
        if (c == '\0') {
            throw syntax_error("unexpected end of input", m_pos);
        }
        if (is_digit(c)) {
            const Integer num(uint_digits());
            // A '/' followed by a digit continues the literal; "1/(...)"
            // is a division instead.
            const std::size_t save = m_pos;
            if (peek() == '/') {
                ++m_pos;
                if (is_digit(peek())) {
                    const std::size_t den_pos = m_pos;
                    const Integer den(uint_digits());
                    if (den == 0) {
                        throw syntax_error("zero denominator in rational literal", den_pos);
                    }
                    return GFExpr::constant(Rational(num, den));
                }
            }
            m_pos = save;
            return GFExpr::constant(Rational(num));
        }
        if (c == 'G') {
            ++m_pos;
            return GFExpr::self_ref();
        }
        if (is_lower(c)) {
            const std::size_t start = m_pos;
            while (!at_end() && (is_lower(m_text[m_pos]) || is_digit(m_text[m_pos]) || m_text[m_pos] == '_')) {
                ++m_pos;
            }
            std::string ident(m_text.substr(start, m_pos - start));
            if (ident == "x") {
                return GFExpr::x();
            }
            return GFExpr::variable(std::move(ident));
        }
        if (c == '(') {
            ++m_pos;
            auto inner = expr();
            if (peek() != ')') {
                if (at_end()) {
                    throw syntax_error("expected ')' but reached end of input", m_pos);
                }
                throw syntax_error("expected ')'", m_pos);
            }
            ++m_pos;
            return inner;
        }
        throw syntax_error("unexpected '" + std::string(1, c) + "'", m_pos);
    }
};

inline void print_into(const GFExpr &e, std::string &out)
{
    using K = GFExpr::Kind;
    switch (e.kind()) {
        case K::constant:
            // Constants are wrapped so "(1)/(2)" cannot be read back as the
            // literal 1/2.
            if (e.value().sign() < 0) {
                out += "(0-(" + (-e.value()).str() + "))";
            } else {
                out += "(" + e.value().str() + ")";
            }
            return;
        case K::variable:
            out += e.name();
            return;
        case K::x:
            out += "x";
            return;
        case K::self_ref:
            out += "G";
            return;
        case K::pow:
            out += "(";
            print_into(e.lhs(), out);
            out += "^" + std::to_string(e.exponent()) + ")";
            return;
        default: {
            const char op = e.kind() == K::add ? '+' : e.kind() == K::sub ? '-' : e.kind() == K::mul ? '*' : '/';
            out += "(";
            print_into(e.lhs(), out);
            out += op;
            print_into(e.rhs(), out);
            out += ")";
        }
    }
}

inline PowerSeries eval_node(const GFExpr &e, const Bindings &env, const PowerSeries &self, std::size_t order)
{
    using K = GFExpr::Kind;
    switch (e.kind()) {
        case K::constant:
            return PowerSeries::constant(e.value(), order);
        case K::variable: {
            const auto it = env.find(e.name());
            if (it == env.end()) {
                throw unbound_variable(e.name());
            }
            return PowerSeries::constant(it->second, order);
        }
        case K::x:
            return PowerSeries::monomial(Rational(1), 1, order);
        case K::self_ref:
            return self;
        case K::pow:
            return pow(eval_node(e.lhs(), env, self, order), e.exponent());
        case K::add:
            return eval_node(e.lhs(), env, self, order) + eval_node(e.rhs(), env, self, order);
        case K::sub:
            return eval_node(e.lhs(), env, self, order) - eval_node(e.rhs(), env, self, order);
        case K::mul:
            return eval_node(e.lhs(), env, self, order) * eval_node(e.rhs(), env, self, order);
        case K::div:
            return eval_node(e.lhs(), env, self, order) / eval_node(e.rhs(), env, self, order);
    }
    throw std::logic_error("unhandled expression kind");
}

inline void check_bound(const GFExpr &e, const Bindings &env)
{
    if (e.kind() == GFExpr::Kind::variable && !env.contains(e.name())) {
        throw unbound_variable(e.name());
    }
    if (e.kind() == GFExpr::Kind::pow) {
        check_bound(e.lhs(), env);
    } else if (e.is_binary()) {
        check_bound(e.lhs(), env);
        check_bound(e.rhs(), env);
    }
}

} // namespace detail

inline GFExpr parse_gf(std::string_view text)
{
    return detail::GFParser(text).parse();
}

// Fully parenthesized source text; parse_gf reads it back to an equal tree.
inline std::string pretty_print(const GFExpr &e)
{
    std::string out;
    detail::print_into(e, out);
    return out;
}

// The series defined by `expr` through the given order. Expressions that
// mention G are solved as G = expr[G] by fixed-point iteration.
inline PowerSeries eval_gf(const GFExpr &expr, const Bindings &env, std::size_t order)
{
    detail::check_bound(expr, env);
    if (!expr.contains_self_ref()) {
        return detail::eval_node(expr, env, PowerSeries::zero(order), order);
    }
    return fixed_point_solve([&](const PowerSeries &g) { return detail::eval_node(expr, env, g, order); }, order);
}

} // namespace hsomos

#endif
