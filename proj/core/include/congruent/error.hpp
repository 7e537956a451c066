#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace congruent {

/// Coarse classification of failures. The CLI maps each kind to an exit code.
enum class ErrorKind {
    Validation,  ///< malformed input, broken precondition on shape or type
    Numeric,     ///< numeric precondition violated (near-zero magnitudes)
    Io,          ///< file system failure
};

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

class NonPositiveResolution : public Error {
public:
    explicit NonPositiveResolution(double resolution);
    double resolution() const noexcept { return resolution_; }

private:
    double resolution_;
};

class NegativeMagnitude : public Error {
public:
    NegativeMagnitude(std::size_t index, double value);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class MagnitudeBelowFloor : public Error {
public:
    MagnitudeBelowFloor(std::size_t index, double value, double floor);
    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

class EmptyList : public Error {
public:
    explicit EmptyList(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

/// Two spectra in an operation do not share resolution and line count.
class NotCongruent : public Error {
public:
    NotCongruent(std::size_t first, std::size_t second);
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class DivisionByNearZero : public Error {
public:
    DivisionByNearZero(std::size_t index, double denominator);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class AllNearZero : public Error {
public:
    explicit AllNearZero(double max_magnitude);
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

class TooFewSamples : public Error {
public:
    explicit TooFewSamples(std::size_t count);
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

class MalformedCsv : public Error {
public:
    MalformedCsv(const std::string& path, std::size_t line, const std::string& detail);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MissingHeader : public Error {
public:
    MissingHeader(const std::string& path, const std::string& key);
};

class LengthMismatch : public Error {
public:
    LengthMismatch(const std::string& path, std::size_t declared, std::size_t actual);
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what)
        : Error(ErrorKind::Io, what) {}
};

/// Scenario definition failed validation (unknown signal, empty job list, ...).
class ScenarioError : public Error {
public:
    explicit ScenarioError(const std::string& what)
        : Error(ErrorKind::Validation, what) {}
};

}  // namespace congruent
