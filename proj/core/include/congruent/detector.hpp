#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "congruent/algebra.hpp"
#include "congruent/spectrum.hpp"

namespace congruent {

struct DetectedFrequency {
    std::size_t bin_index = 0;
    double frequency = 0.0;
    double magnitude = 0.0;
    std::size_t rank = 0;  ///< 1 is the largest magnitude

    friend bool operator==(const DetectedFrequency&, const DetectedFrequency&) = default;
};

/// The k largest lines of `s`, largest first; equal magnitudes keep the lower
/// bin first. Bin 0 is skipped when exclude_dc is set. Returns fewer than k
/// entries when fewer lines are eligible. Throws InvalidArgument for k == 0.
std::vector<DetectedFrequency> emphasized(const Spectrum& s, std::size_t k, bool exclude_dc = true);

/// Frequencies significant in every spectrum: emphasized(product(spectra)).
std::vector<DetectedFrequency> common_frequencies(std::span<const Spectrum> spectra, std::size_t k,
                                                  bool exclude_dc = true);

/// Frequencies significant in all of `emphasize` and insignificant in all of
/// `suppress`: emphasized(group_contrast(emphasize, suppress, policy)).
std::vector<DetectedFrequency> non_common_frequencies(std::span<const Spectrum> emphasize,
                                                      std::span<const Spectrum> suppress,
                                                      const DivisionPolicy& policy, std::size_t k,
                                                      bool exclude_dc = true);

}  // namespace congruent
