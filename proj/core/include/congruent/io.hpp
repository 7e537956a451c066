#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>

#include "congruent/detector.hpp"
#include "congruent/dsp.hpp"
#include "congruent/spectrum.hpp"

namespace congruent {

// Samples CSV:
//
//   # sample_rate=100
//   # axis=paper              (optional, paper|standard, default paper)
//   # sample_count=256        (optional, checked against the row count)
//   # drawn_lines=128         (optional, default sample_count / 2)
//   index,value               (optional column header)
//   0,1.0
//   1,0.93
//   ...
//
// Spectrum CSV:    bin,frequency_hz,magnitude
// Detections CSV:  rank,bin,frequency_hz,magnitude
//
// Numbers are written with 9 significant digits, '.' separator, LF endings.

/// Throws MissingHeader, MalformedCsv (1-based line), LengthMismatch,
/// TooFewSamples or IoError.
SampleSeries read_samples_csv(const std::filesystem::path& path);
void write_samples_csv(const SampleSeries& series, const std::filesystem::path& path);

void format_spectrum_csv(const Spectrum& s, std::ostream& out);
void format_detections_csv(std::span<const DetectedFrequency> detections, std::ostream& out);

/// Files are written to a sibling temporary and renamed into place.
/// Throws IoError.
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);
void write_detections_csv(std::span<const DetectedFrequency> detections,
                          const std::filesystem::path& path);

/// Reads a spectrum CSV back. Without an explicit resolution it is inferred
/// from the last row, which needs at least two rows.
Spectrum read_spectrum_csv(const std::filesystem::path& path,
                           std::optional<double> resolution = std::nullopt);

}  // namespace congruent
