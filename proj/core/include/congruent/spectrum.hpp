#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace congruent {

/// Relative tolerance used when comparing resolutions and line frequencies.
inline constexpr double kResolutionTolerance = 1e-9;

/// One (frequency, magnitude) doublet.
struct SpectralLine {
    double frequency = 0.0;  ///< hertz
    double magnitude = 0.0;

    friend bool operator==(const SpectralLine&, const SpectralLine&) = default;
};

/// Discrete magnitude spectrum: lines i = 0..N at frequencies i * resolution.
///
/// Instances are immutable and always satisfy the invariants (at least one
/// line, positive resolution, non-negative magnitudes, uniform spacing).
/// Construct through make_spectrum().
class Spectrum {
public:
    std::size_t size() const noexcept { return lines_.size(); }
    double resolution() const noexcept { return resolution_; }

    std::span<const SpectralLine> lines() const noexcept { return lines_; }
    const SpectralLine& operator[](std::size_t i) const { return lines_[i]; }

    double magnitude(std::size_t i) const { return lines_[i].magnitude; }
    double frequency(std::size_t i) const { return lines_[i].frequency; }
    std::vector<double> magnitudes() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    Spectrum(std::vector<SpectralLine> lines, double resolution)
        : lines_(std::move(lines)), resolution_(resolution) {}

    friend Spectrum make_spectrum(std::span<const double> values, double resolution);

    std::vector<SpectralLine> lines_;
    double resolution_ = 1.0;
};

/// Builds a spectrum with lines[i] = (i * resolution, values[i]).
///
/// Throws EmptyInput, NonPositiveResolution or NegativeMagnitude (carrying
/// the offending index). NaN magnitudes are rejected as negative.
Spectrum make_spectrum(std::span<const double> values, double resolution);

/// Same resolution (relative 1e-9) and the same number of lines.
bool is_congruent(const Spectrum& a, const Spectrum& b) noexcept;

}  // namespace congruent
