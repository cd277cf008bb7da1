#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sep {

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A path vector with two or more unit paths describes a multigraph. Such
// inputs are only valid for formula evaluation.
class MultigraphError : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

// Facet theory assumes a connected input graph.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace sep
