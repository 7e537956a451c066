#include "congruent/error.hpp"

#include "format.hpp"

namespace congruent {

NonPositiveResolution::NonPositiveResolution(double resolution)
    : Error(ErrorKind::Validation,
            "resolution must be positive, got " + detail::format_number(resolution)),
      resolution_(resolution) {}

NegativeMagnitude::NegativeMagnitude(std::size_t index, double value)
    : Error(ErrorKind::Validation,
            "negative magnitude " + detail::format_number(value) + " at index " +
                std::to_string(index)),
      index_(index) {}

MagnitudeBelowFloor::MagnitudeBelowFloor(std::size_t index, double value, double floor)
    : Error(ErrorKind::Numeric,
            "magnitude " + detail::format_number(value) + " at index " + std::to_string(index) +
                " is below the inversion floor " + detail::format_number(floor)),
      index_(index),
      value_(value) {}

NotCongruent::NotCongruent(std::size_t first, std::size_t second)
    : Error(ErrorKind::Validation,
            "spectra " + std::to_string(first) + " and " + std::to_string(second) +
                " are not congruent (resolution or line count differ)"),
      first_(first),
      second_(second) {}

DivisionByNearZero::DivisionByNearZero(std::size_t index, double denominator)
    : Error(ErrorKind::Numeric,
            "plain division by near-zero denominator " + detail::format_number(denominator) +
                " at index " + std::to_string(index)),
      index_(index) {}

AllNearZero::AllNearZero(double max_magnitude)
    : Error(ErrorKind::Numeric,
            "cannot normalize: maximum magnitude " + detail::format_number(max_magnitude) +
                " is near zero") {}

TooFewSamples::TooFewSamples(std::size_t count)
    : Error(ErrorKind::Validation,
            "at least 2 samples are required, got " + std::to_string(count)),
      count_(count) {}

MalformedCsv::MalformedCsv(const std::string& path, std::size_t line, const std::string& detail)
    : Error(ErrorKind::Validation,
            path + ":" + std::to_string(line) + ": malformed CSV: " + detail),
      line_(line) {}

MissingHeader::MissingHeader(const std::string& path, const std::string& key)
    : Error(ErrorKind::Validation, path + ": missing required header '# " + key + "=...'") {}

LengthMismatch::LengthMismatch(const std::string& path, std::size_t declared, std::size_t actual)
    : Error(ErrorKind::Validation,
            path + ": header declares " + std::to_string(declared) + " samples but " +
                std::to_string(actual) + " rows were read") {}

}  // namespace congruent
