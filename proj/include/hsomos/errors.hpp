#ifndef HSOMOS_ERRORS_HPP
#define HSOMOS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsomos
{

// Base class for every failure raised by the library. Callers that only care
// about "did the computation go through" can catch this one type.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class zero_divisor : public error
{
public:
    using error::error;
};

// Series inverse requested for a series whose constant term vanishes.
class zero_constant_term : public error
{
public:
    using error::error;
};

// Fixed-point iteration did not single out a unique power series.
class not_contractive : public error
{
public:
    using error::error;
};

class insufficient_order : public error
{
public:
    using error::error;
};

class zero_leading_coefficient : public error
{
public:
    using error::error;
};

// Parameters are not in the e = -1 shape required by the Somos certificate.
class wrong_form : public error
{
public:
    using error::error;
};

class index_out_of_orbit : public error
{
public:
    using error::error;
};

class too_large : public error
{
public:
    using error::error;
};

class too_short : public error
{
public:
    using error::error;
};

class unbound_variable : public error
{
public:
    explicit unbound_variable(const std::string &name)
        : error("unbound variable '" + name + "'"), m_name(name)
    {
    }
    const std::string &name() const noexcept
    {
        return m_name;
    }

private:
    std::string m_name;
};

class degenerate_bindings : public error
{
public:
    using error::error;
};

// Parse failures carry the byte offset into the source text.
class syntax_error : public error
{
public:
    syntax_error(const std::string &what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), m_position(position)
    {
    }
    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

class unknown_character : public syntax_error
{
public:
    unknown_character(char c, std::size_t position)
        : syntax_error(std::string("unknown character '") + c + "'", position)
    {
    }
};

} // namespace hsomos

#endif
