#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "congruent/spectrum.hpp"

namespace congruent {

/// How bin indices are labeled with frequencies.
///
/// `Paper` spaces lines by sample_rate / (sample_count - 1), which gives the
/// 0.392157 Hz grid for 256 samples at 100 Hz. `Standard` uses the usual
/// sample_rate / sample_count. Magnitudes are identical; only labels differ.
enum class AxisConvention { Paper, Standard };

class SamplingConfig {
public:
    /// Throws InvalidArgument (or TooFewSamples for sample_count < 2) when the
    /// rate is not positive or drawn_lines is outside 1..sample_count/2 + 1.
    SamplingConfig(double sample_rate, std::size_t sample_count, std::size_t drawn_lines,
                   AxisConvention axis = AxisConvention::Paper);

    /// 100 Hz, 256 samples, 128 drawn lines, paper axis.
    static SamplingConfig reference();

    double sample_rate() const noexcept { return sample_rate_; }
    std::size_t sample_count() const noexcept { return sample_count_; }
    std::size_t drawn_lines() const noexcept { return drawn_lines_; }
    AxisConvention axis() const noexcept { return axis_; }

    /// (sample_count - 1) / sample_rate.
    double sampling_time() const noexcept;
    double resolution() const noexcept;

    SamplingConfig with_axis(AxisConvention axis) const;

    friend bool operator==(const SamplingConfig&, const SamplingConfig&) = default;

private:
    double sample_rate_;
    std::size_t sample_count_;
    std::size_t drawn_lines_;
    AxisConvention axis_;
};

enum class Shape { Sin, Cos };

struct SignalTerm {
    Shape shape = Shape::Sin;
    int sign = 1;  ///< +1 or -1
    double frequency = 0.0;
    double amplitude = 1.0;

    friend bool operator==(const SignalTerm&, const SignalTerm&) = default;
};

/// A synthetic signal: a sum of signed sinusoidal terms.
class SignalSpec {
public:
    /// Throws InvalidArgument for an empty term list, a sign other than
    /// +/-1, or a negative or non-finite frequency.
    explicit SignalSpec(std::vector<SignalTerm> terms);

    std::span<const SignalTerm> terms() const noexcept { return terms_; }

    friend bool operator==(const SignalSpec&, const SignalSpec&) = default;

private:
    std::vector<SignalTerm> terms_;
};

class SampleSeries {
public:
    /// Throws TooFewSamples or InvalidArgument when values.size() differs
    /// from config.sample_count().
    SampleSeries(std::vector<double> values, SamplingConfig config);

    std::span<const double> values() const noexcept { return values_; }
    const SamplingConfig& config() const noexcept { return config_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// Same samples, every value multiplied by `factor`.
    SampleSeries scaled(double factor) const;

private:
    std::vector<double> values_;
    SamplingConfig config_;
};

SampleSeries synthesize(const SignalSpec& spec, const SamplingConfig& config);

bool is_power_of_two(std::size_t n) noexcept;

/// In-place iterative radix-2 decimation-in-time transform (forward,
/// unnormalized). Throws InvalidArgument unless data.size() is a power of two.
void fft_in_place(std::span<std::complex<double>> data);

/// One-sided magnitude spectrum of the first drawn_lines bins, scaled 1/N at
/// DC and 2/N elsewhere, so an on-bin unit sinusoid reads 1.0. Uses the
/// radix-2 path for power-of-two lengths, direct summation otherwise.
Spectrum magnitude_spectrum(const SampleSeries& samples);

/// Same contract as magnitude_spectrum(), always by direct O(N^2) summation.
Spectrum dft_oracle(const SampleSeries& samples);

}  // namespace congruent
