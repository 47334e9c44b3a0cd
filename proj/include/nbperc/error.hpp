#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbperc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Violation of the simple-digraph invariants (self-loop, duplicate arc, bad id).
class GraphError : public Error {
public:
    enum class Kind { self_loop, duplicate_arc, vertex_out_of_range };
    GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A bound or series evaluated outside the region where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Exact computation refused because the input exceeds a configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic overflowed; `power()` is the offending walk length.
class OverflowError : public Error {
public:
    explicit OverflowError(std::size_t power)
        : Error("exact trace overflow at power s=" + std::to_string(power)), power_(power) {}
    std::size_t power() const noexcept { return power_; }

private:
    std::size_t power_;
};

/// Iterative eigen-solver failed; carries the certified bracket it reached.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, double lower, double upper)
        : Error(what + " (bracket [" + std::to_string(lower) + ", " + std::to_string(upper) + "])"),
          lower_(lower), upper_(upper) {}
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double width() const noexcept { return upper_ - lower_; }

private:
    double lower_;
    double upper_;
};

/// Perron vector requested on an operator whose oriented line graph is reducible.
class NotStronglyConnectedError : public Error {
public:
    NotStronglyConnectedError(const std::string& what, std::size_t offending_arc)
        : Error(what), offending_arc_(offending_arc) {}
    std::size_t offending_arc() const noexcept { return offending_arc_; }

private:
    std::size_t offending_arc_;
};

}  // namespace nbperc
