#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcover {

/// Invalid construction parameters (bad n, k, group orders, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative numerics failed (e.g. eigensolver did not converge).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold mathematically was observed to fail.
/// Always indicates a bug in this library.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Operation not defined for the given group kind.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed the caller's budget.
class BudgetExceeded : public std::runtime_error {
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

/// A theorem check whose hypotheses were verified failed its conclusion.
/// Carries a gain file that reproduces the failure.
class Falsification : public std::runtime_error {
public:
    Falsification(const std::string& what, std::string reproducer)
        : std::runtime_error(what), reproducer_(std::move(reproducer))
    {
    }

    const std::string& reproducer() const noexcept { return reproducer_; }

private:
    std::string reproducer_;
};

} // namespace gcover
