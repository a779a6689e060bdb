#pragma once

#include <stdexcept>
#include <string>

namespace ekrlab
{
    class InvalidParameter : public std::invalid_argument
    {
    public:
        explicit InvalidParameter(const std::string & m) : std::invalid_argument("invalid parameter: " + m) {}
    };

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, const std::string & m) :
            std::runtime_error("parse error at line " + std::to_string(line) + ": " + m),
            _line(line)
        {
        }

        [[nodiscard]] auto line() const -> int { return _line; }

    private:
        int _line;
    };

    class HostMismatch : public std::invalid_argument
    {
    public:
        explicit HostMismatch(const std::string & m) : std::invalid_argument("host mismatch: " + m) {}
    };

    class DivisionByZero : public std::domain_error
    {
    public:
        DivisionByZero() : std::domain_error("division by zero in finite field") {}
    };

    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(const std::string & m) : std::runtime_error("config error: " + m) {}
    };
}
