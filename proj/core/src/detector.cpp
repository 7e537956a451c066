#include "congruent/detector.hpp"

#include <algorithm>
#include <numeric>

#include "congruent/error.hpp"

namespace congruent {

std::vector<DetectedFrequency> emphasized(const Spectrum& s, std::size_t k, bool exclude_dc) {
    if (k == 0) {
        throw InvalidArgument("k must be at least 1");
    }
    const std::size_t first = exclude_dc ? 1 : 0;
    if (s.size() <= first) {
        return {};
    }

    std::vector<std::size_t> order(s.size() - first);
    std::iota(order.begin(), order.end(), first);
    const std::size_t take = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (s.magnitude(a) != s.magnitude(b)) {
                              return s.magnitude(a) > s.magnitude(b);
                          }
                          return a < b;
                      });

    std::vector<DetectedFrequency> out;
    out.reserve(take);
    for (std::size_t r = 0; r < take; ++r) {
        const std::size_t bin = order[r];
        out.push_back({bin, s.frequency(bin), s.magnitude(bin), r + 1});
    }
    return out;
}

std::vector<DetectedFrequency> common_frequencies(std::span<const Spectrum> spectra, std::size_t k,
                                                  bool exclude_dc) {
    return emphasized(product(spectra), k, exclude_dc);
}

std::vector<DetectedFrequency> non_common_frequencies(std::span<const Spectrum> emphasize,
                                                      std::span<const Spectrum> suppress,
                                                      const DivisionPolicy& policy, std::size_t k,
                                                      bool exclude_dc) {
    return emphasized(group_contrast(emphasize, suppress, policy), k, exclude_dc);
}

}  // namespace congruent
