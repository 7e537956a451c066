#include "congruent/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "congruent/error.hpp"

namespace congruent {
namespace {

void require_pairwise_congruent(std::span<const Spectrum> spectra, std::size_t offset = 0) {
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        for (std::size_t j = i + 1; j < spectra.size(); ++j) {
            if (!is_congruent(spectra[i], spectra[j])) {
                throw NotCongruent(offset + i, offset + j);
            }
        }
    }
}

}  // namespace

DivisionPolicy::DivisionPolicy(DivisionMode mode, double epsilon)
    : mode_(mode), epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InvalidArgument("division epsilon must be positive and finite");
    }
}

Spectrum invert(const Spectrum& s, double floor) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double a = s.magnitude(i);
        if (a < floor) {
            throw MagnitudeBelowFloor(i, a, floor);
        }
        out[i] = 1.0 / a;
    }
    return make_spectrum(out, s.resolution());
}

Spectrum product(std::span<const Spectrum> spectra) {
    if (spectra.empty()) {
        throw EmptyList("product needs at least one spectrum");
    }
    require_pairwise_congruent(spectra);

    std::vector<double> acc = spectra.front().magnitudes();
    for (const auto& s : spectra.subspan(1)) {
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] *= s.magnitude(i);
        }
    }
    return make_spectrum(acc, spectra.front().resolution());
}

Spectrum ratio(const Spectrum& numerator, const Spectrum& denominator,
               const DivisionPolicy& policy) {
    if (!is_congruent(numerator, denominator)) {
        throw NotCongruent(0, 1);
    }
    std::vector<double> out(numerator.size());
    const double eps = policy.epsilon();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double n = numerator.magnitude(i);
        const double d = denominator.magnitude(i);
        if (policy.mode() == DivisionMode::Plain) {
            if (d < kDefaultInversionFloor) {
                throw DivisionByNearZero(i, d);
            }
            out[i] = n / d;
        } else if (n < eps && d < eps) {
            out[i] = 0.0;
        } else if (d < eps) {
            out[i] = n / eps;
        } else {
            out[i] = n / d;
        }
    }
    return make_spectrum(out, numerator.resolution());
}

Spectrum group_contrast(std::span<const Spectrum> emphasize, std::span<const Spectrum> suppress,
                        const DivisionPolicy& policy) {
    if (emphasize.empty()) {
        throw EmptyList("group contrast needs at least one spectrum to emphasize");
    }
    if (suppress.empty()) {
        throw EmptyList("group contrast needs at least one spectrum to suppress");
    }
    // Indices in NotCongruent refer to the concatenation emphasize ++ suppress.
    require_pairwise_congruent(emphasize);
    require_pairwise_congruent(suppress, emphasize.size());
    if (!is_congruent(emphasize.front(), suppress.front())) {
        throw NotCongruent(0, emphasize.size());
    }
    return ratio(product(emphasize), product(suppress), policy);
}

Spectrum normalize_max(const Spectrum& s) {
    double peak = 0.0;
    for (const auto& line : s.lines()) {
        peak = std::max(peak, line.magnitude);
    }
    if (peak < kDefaultInversionFloor) {
        throw AllNearZero(peak);
    }
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = s.magnitude(i) / peak;
    }
    return make_spectrum(out, s.resolution());
}

Spectrum ones_like(const Spectrum& like) {
    const std::vector<double> ones(like.size(), 1.0);
    return make_spectrum(ones, like.resolution());
}

}  // namespace congruent
