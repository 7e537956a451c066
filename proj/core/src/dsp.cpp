#include "congruent/dsp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "congruent/error.hpp"

namespace congruent {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Spectrum one_sided(std::span<const std::complex<double>> bins, const SamplingConfig& config) {
    const auto n = static_cast<double>(config.sample_count());
    std::vector<double> magnitudes(config.drawn_lines());
    for (std::size_t k = 0; k < magnitudes.size(); ++k) {
        const double scale = k == 0 ? 1.0 / n : 2.0 / n;
        magnitudes[k] = std::abs(bins[k]) * scale;
    }
    return make_spectrum(magnitudes, config.resolution());
}

std::vector<std::complex<double>> direct_transform(std::span<const double> x, std::size_t bins) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            // Reduce k*t modulo n first so the angle stays in [0, 2*pi).
            const double angle = kTwoPi * static_cast<double>((k * t) % n) / static_cast<double>(n);
            re += x[t] * std::cos(angle);
            im -= x[t] * std::sin(angle);
        }
        out[k] = {re, im};
    }
    return out;
}

}  // namespace

SamplingConfig::SamplingConfig(double sample_rate, std::size_t sample_count,
                               std::size_t drawn_lines, AxisConvention axis)
    : sample_rate_(sample_rate),
      sample_count_(sample_count),
      drawn_lines_(drawn_lines),
      axis_(axis) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw InvalidArgument("sample rate must be positive and finite");
    }
    if (sample_count < 2) {
        throw TooFewSamples(sample_count);
    }
    if (drawn_lines < 1 || drawn_lines > sample_count / 2 + 1) {
        throw InvalidArgument("drawn lines must be in 1.." + std::to_string(sample_count / 2 + 1) +
                              ", got " + std::to_string(drawn_lines));
    }
}

SamplingConfig SamplingConfig::reference() {
    return {100.0, 256, 128, AxisConvention::Paper};
}

double SamplingConfig::sampling_time() const noexcept {
    return static_cast<double>(sample_count_ - 1) / sample_rate_;
}

double SamplingConfig::resolution() const noexcept {
    const auto n = static_cast<double>(sample_count_);
    return axis_ == AxisConvention::Paper ? sample_rate_ / (n - 1.0) : sample_rate_ / n;
}

SamplingConfig SamplingConfig::with_axis(AxisConvention axis) const {
    return {sample_rate_, sample_count_, drawn_lines_, axis};
}

SignalSpec::SignalSpec(std::vector<SignalTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw InvalidArgument("signal needs at least one term");
    }
    for (const auto& term : terms_) {
        if (term.sign != 1 && term.sign != -1) {
            throw InvalidArgument("term sign must be +1 or -1");
        }
        if (!(term.frequency >= 0.0) || !std::isfinite(term.frequency)) {
            throw InvalidArgument("term frequency must be finite and non-negative");
        }
        if (!std::isfinite(term.amplitude)) {
            throw InvalidArgument("term amplitude must be finite");
        }
    }
}

SampleSeries::SampleSeries(std::vector<double> values, SamplingConfig config)
    : values_(std::move(values)), config_(config) {
    if (values_.size() < 2) {
        throw TooFewSamples(values_.size());
    }
    if (values_.size() != config_.sample_count()) {
        throw InvalidArgument("series has " + std::to_string(values_.size()) +
                              " values but config expects " +
                              std::to_string(config_.sample_count()));
    }
}

SampleSeries SampleSeries::scaled(double factor) const {
    std::vector<double> out(values_.begin(), values_.end());
    for (auto& v : out) {
        v *= factor;
    }
    return {std::move(out), config_};
}

SampleSeries synthesize(const SignalSpec& spec, const SamplingConfig& config) {
    std::vector<double> values(config.sample_count(), 0.0);
    for (std::size_t n = 0; n < values.size(); ++n) {
        const double t = static_cast<double>(n) / config.sample_rate();
        double sum = 0.0;
        for (const auto& term : spec.terms()) {
            const double phase = kTwoPi * term.frequency * t;
            const double wave = term.shape == Shape::Sin ? std::sin(phase) : std::cos(phase);
            sum += term.sign * term.amplitude * wave;
        }
        values[n] = sum;
    }
    return {std::move(values), config};
}

bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

void fft_in_place(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw InvalidArgument("radix-2 transform needs a power-of-two length, got " +
                              std::to_string(n));
    }

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }

    // Twiddles for the full length; stage of size `len` uses every (n/len)-th.
    std::vector<std::complex<double>> twiddle(n / 2);
    for (std::size_t k = 0; k < twiddle.size(); ++k) {
        twiddle[k] = std::polar(1.0, -kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const auto u = data[start + k];
                const auto v = data[start + k + half] * twiddle[k * stride];
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

Spectrum magnitude_spectrum(const SampleSeries& samples) {
    const auto& config = samples.config();
    if (!is_power_of_two(samples.size())) {
        return one_sided(direct_transform(samples.values(), config.drawn_lines()), config);
    }
    std::vector<std::complex<double>> data(samples.values().begin(), samples.values().end());
    fft_in_place(data);
    return one_sided(data, config);
}

Spectrum dft_oracle(const SampleSeries& samples) {
    const auto& config = samples.config();
    return one_sided(direct_transform(samples.values(), config.drawn_lines()), config);
}

}  // namespace congruent
