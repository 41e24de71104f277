#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streamstl {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A configuration invariant was violated; the message names the constraint.
class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& what) : Error(what) {}
};

/// A linear solve could not be completed.
class SolverFailure : public Error {
public:
    explicit SolverFailure(const std::string& what) : Error(what) {}
};

/// A factorization pivot fell below the positive-definiteness floor.
class NonPositivePivot : public SolverFailure {
public:
    NonPositivePivot(std::size_t row, double pivot)
        : SolverFailure("non-positive pivot " + std::to_string(pivot) + " at row " +
                        std::to_string(row)),
          row_(row),
          pivot_(pivot) {}

    std::size_t row() const { return row_; }
    double pivot() const { return pivot_; }

private:
    std::size_t row_;
    double pivot_;
};

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input") {}
};

/// No qualifying autocorrelation peak was found.
class NoPeriod : public Error {
public:
    explicit NoPeriod(const std::string& what) : Error(what) {}
};

}  // namespace streamstl
