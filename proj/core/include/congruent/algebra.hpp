#pragma once

#include <span>

#include "congruent/spectrum.hpp"

namespace congruent {

/// Smallest magnitude accepted by invert() and by plain-mode ratio().
inline constexpr double kDefaultInversionFloor = 1e-12;

/// Threshold below which a magnitude counts as numerical noise in
/// conditioned division.
inline constexpr double kDefaultDivisionEpsilon = 1e-6;

enum class DivisionMode { Plain, Conditioned };

/// Rule for element-wise division of congruent spectra.
///
/// Conditioned mode, per index, with n the numerator and d the denominator:
///   n < eps and d < eps  -> 0
///   d < eps <= n         -> n / eps
///   otherwise            -> n / d
class DivisionPolicy {
public:
    /// Throws InvalidArgument unless epsilon is positive and finite.
    DivisionPolicy(DivisionMode mode, double epsilon = kDefaultDivisionEpsilon);

    static DivisionPolicy plain() { return {DivisionMode::Plain}; }
    static DivisionPolicy conditioned(double epsilon = kDefaultDivisionEpsilon) {
        return {DivisionMode::Conditioned, epsilon};
    }

    DivisionMode mode() const noexcept { return mode_; }
    double epsilon() const noexcept { return epsilon_; }

    friend bool operator==(const DivisionPolicy&, const DivisionPolicy&) = default;

private:
    DivisionMode mode_;
    double epsilon_;
};

/// Reciprocal spectrum. Throws MagnitudeBelowFloor for the first magnitude
/// smaller than `floor`.
Spectrum invert(const Spectrum& s, double floor = kDefaultInversionFloor);

/// Element-wise product of pairwise congruent spectra, folded left to right.
/// Throws EmptyList or NotCongruent (first offending pair, list indices).
Spectrum product(std::span<const Spectrum> spectra);

/// Element-wise quotient under `policy`.
/// Throws NotCongruent, or DivisionByNearZero in plain mode when a
/// denominator is below kDefaultInversionFloor.
Spectrum ratio(const Spectrum& numerator, const Spectrum& denominator,
               const DivisionPolicy& policy);

/// ratio(product(emphasize), product(suppress), policy).
Spectrum group_contrast(std::span<const Spectrum> emphasize, std::span<const Spectrum> suppress,
                        const DivisionPolicy& policy);

/// Divides every magnitude by the maximum. Throws AllNearZero when the
/// maximum is below kDefaultInversionFloor.
Spectrum normalize_max(const Spectrum& s);

/// All-ones spectrum congruent with `like`; the multiplicative identity.
Spectrum ones_like(const Spectrum& like);

}  // namespace congruent
