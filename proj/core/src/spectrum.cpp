#include "congruent/spectrum.hpp"

#include <cmath>

#include "congruent/error.hpp"

namespace congruent {

std::vector<double> Spectrum::magnitudes() const {
    std::vector<double> out;
    out.reserve(lines_.size());
    for (const auto& line : lines_) {
        out.push_back(line.magnitude);
    }
    return out;
}

Spectrum make_spectrum(std::span<const double> values, double resolution) {
    if (values.empty()) {
        throw EmptyInput("spectrum needs at least one magnitude");
    }
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw NonPositiveResolution(resolution);
    }
    std::vector<SpectralLine> lines;
    lines.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0)) {
            throw NegativeMagnitude(i, values[i]);
        }
        lines.push_back({static_cast<double>(i) * resolution, values[i]});
    }
    return Spectrum(std::move(lines), resolution);
}

bool is_congruent(const Spectrum& a, const Spectrum& b) noexcept {
    if (a.size() != b.size()) {
        return false;
    }
    return std::abs(a.resolution() - b.resolution()) / a.resolution() <= kResolutionTolerance;
}

}  // namespace congruent
