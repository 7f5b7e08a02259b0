#pragma once

#include <stdexcept>
#include <string>

namespace aode {

/// Input is outside the exactly-supported range of an algorithm (e.g. a
/// factorization degree we refuse to guess at) or an enumeration budget
/// was exhausted. Maps to CLI exit code 4.
class UnsupportedRangeError : public std::runtime_error {
public:
    explicit UnsupportedRangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition was violated. Maps to CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Expression syntax error with position information. Maps to CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace aode
