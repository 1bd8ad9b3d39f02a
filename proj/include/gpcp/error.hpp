#pragma once

#include <stdexcept>
#include <string>

namespace gpcp {

/// Malformed input text (CSV, axis expressions).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a data or configuration constraint.
class ValidationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace gpcp
