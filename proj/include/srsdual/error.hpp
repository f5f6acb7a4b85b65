#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srsdual {

/// Malformed textual input (SRS, GPCP, TRS files or command-line strings).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line number, or 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called on input outside its contract
/// (e.g. joinability on a system that is not certified convergent).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A rewrite budget ran out before a normal form was reached.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace srsdual
