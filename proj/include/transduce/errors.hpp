#pragma once

#include <stdexcept>
#include <string>

namespace transduce {

// Base for every error the library raises. The CLI maps ArgumentError to a
// usage failure and everything else to a data failure.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition on an argument (bad axis, negative power, ...).
class ArgumentError : public Error
{
public:
    using Error::Error;
};

// Required data absent or inconsistent (missing p entry, unknown material).
class DataError : public Error
{
public:
    using Error::Error;
};

// Query outside a declared validity interval.
class RangeError : public Error
{
public:
    RangeError(const std::string& what, double lo, double hi)
        : Error(what), lo_(lo), hi_(hi)
    {
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

// Malformed material file.
class ParseError : public Error
{
public:
    using Error::Error;
};

// Well-formed file whose content breaks a schema rule.
class ValidationError : public Error
{
public:
    using Error::Error;
};

// Miller constant requested for a band with n == 1.
class SingularityError : public Error
{
public:
    using Error::Error;
};

}  // namespace transduce
