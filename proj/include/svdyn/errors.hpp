#pragma once

#include <stdexcept>
#include <string>

namespace svdyn {

// Input values outside the unit square, malformed pieces, etc.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation preconditions (invalid cycle, missing surjectivity, ...).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input that does not conform to the .plrel grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Configured caps exceeded (cell count, enumeration budget where hard).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant was violated; carries a diagnostic dump.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace svdyn
