#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace twistlab {

// Mismatched symplectic spaces or vector lengths.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unbound symbols, malformed configuration files, corrupted shipped data.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid ThetaParams, genus out of range and similar user input problems.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Precondition violated by the caller (non-symmetric form, non-symplectic matrix).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class IllegalMove : public std::runtime_error {
public:
    explicit IllegalMove(const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : std::runtime_error(what), step_(step) {}

    // One-based script step, set by replay.
    std::optional<std::size_t> step() const { return step_; }

private:
    std::optional<std::size_t> step_;
};

class DerivationMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SeparatingCycleUnsupported : public std::runtime_error {
public:
    explicit SeparatingCycleUnsupported(std::size_t index)
        : std::runtime_error("vanishing cycle " + std::to_string(index + 1) +
                             " has zero homology class (separating cycles are unsupported)"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class NotAFibrationOverSphere : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace twistlab
