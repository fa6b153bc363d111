#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromspec {

// Invalid arguments, parameters out of range, broken type invariants.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Jacobi sweep cap reached before the off-diagonal norm fell below threshold.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual, int sweeps)
        : std::runtime_error(msg), residual_(residual), sweeps_(sweeps) {}

    double residual() const noexcept { return residual_; }
    int sweeps() const noexcept { return sweeps_; }

private:
    double residual_;
    int sweeps_;
};

// Graph file parsing failure. `position` is a byte offset for graph6 input
// and a 1-based line number for the line-oriented formats.
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        bad_char,
        long_form,
        truncated,
        trailing_data,
        bad_header,
        missing_header,
        duplicate_header,
        bad_integer,
        vertex_range,
        self_loop,
        bad_line,
    };

    ParseError(Kind kind, std::size_t position, const std::string& msg)
        : std::runtime_error(msg), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

// Chromatic bounds requested for an edgeless graph.
class UndefinedBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chromspec
