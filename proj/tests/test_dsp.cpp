#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "congruent/dsp.hpp"
#include "congruent/error.hpp"
#include "support/reference.hpp"

using namespace congruent;
namespace ts = testing_support;

TEST_CASE("sampling config") {
    const auto cfg = SamplingConfig::reference();
    CHECK(cfg.sample_rate() == 100.0);
    CHECK(cfg.sample_count() == 256);
    CHECK(cfg.drawn_lines() == 128);
    CHECK(cfg.sampling_time() == doctest::Approx(2.55).epsilon(1e-12));
    CHECK(std::abs(cfg.resolution() - 0.392157) <= 1e-6);
    CHECK(cfg.resolution() == 100.0 / 255.0);
    CHECK(cfg.with_axis(AxisConvention::Standard).resolution() == 100.0 / 256.0);

    CHECK_THROWS_AS(SamplingConfig(0.0, 256, 128), InvalidArgument);
    CHECK_THROWS_AS(SamplingConfig(100.0, 1, 1), TooFewSamples);
    CHECK_THROWS_AS(SamplingConfig(100.0, 256, 0), InvalidArgument);
    CHECK_THROWS_AS(SamplingConfig(100.0, 256, 130), InvalidArgument);
    CHECK_NOTHROW(SamplingConfig(100.0, 256, 129));
}

TEST_CASE("signal spec validation") {
    CHECK_THROWS_AS(SignalSpec({}), InvalidArgument);
    CHECK_THROWS_AS(SignalSpec({{Shape::Sin, 2, 1.0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(SignalSpec({{Shape::Sin, 1, -1.0, 1.0}}), InvalidArgument);
}

TEST_CASE("synthesize") {
    const auto signals = ts::reference_signals();
    const auto cfg = SamplingConfig::reference();
    const auto s1 = synthesize(signals[0], cfg);
    CHECK(s1.size() == 256);
    CHECK(s1.values()[0] == 1.0);
    CHECK(synthesize(signals[4], cfg).values()[0] == 1.0);

    // closed form at n = 5, t = 0.05 s
    const double t = 0.05;
    const double pi2 = 2 * std::numbers::pi;
    const double expected = std::sin(pi2 * 11 * t) + std::cos(pi2 * 13 * t) - std::sin(pi2 * 17 * t);
    CHECK(s1.values()[5] == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("sample series length must match config") {
    CHECK_THROWS_AS(SampleSeries({1.0, 2.0, 3.0}, SamplingConfig(10.0, 4, 2)), InvalidArgument);
    CHECK_THROWS_AS(SampleSeries({1.0}, SamplingConfig(10.0, 2, 1)), TooFewSamples);
}

TEST_CASE("constant series is DC only") {
    for (std::size_t n : {2u, 7u, 16u, 100u, 256u}) {
        const SamplingConfig cfg(100.0, n, n / 2 + 1);
        const SampleSeries series(std::vector<double>(n, 1.0), cfg);
        for (const auto& s : {magnitude_spectrum(series), dft_oracle(series)}) {
            CHECK(s.magnitude(0) == doctest::Approx(1.0).epsilon(1e-12));
            for (std::size_t i = 1; i < s.size(); ++i) {
                CHECK(s.magnitude(i) <= 1e-12);
            }
        }
    }
}

TEST_CASE("on-bin sinusoid reads its amplitude") {
    const SamplingConfig cfg(64.0, 64, 32, AxisConvention::Standard);
    for (const double amplitude : {1.0, 0.5, 2.5}) {
        const SignalSpec spec({{Shape::Sin, 1, 5.0, amplitude}});
        const auto series = synthesize(spec, cfg);
        for (const auto& s : {dft_oracle(series), magnitude_spectrum(series)}) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i == 5) {
                    CHECK(std::abs(s.magnitude(i) - amplitude) <= 1e-9);
                } else {
                    CHECK(s.magnitude(i) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("fft matches the direct transform on complex data") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t n = 1; n <= 512; n <<= 1) {
        std::vector<std::complex<double>> x(n);
        for (auto& v : x) v = {dist(rng), dist(rng)};
        auto y = x;
        fft_in_place(y);
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> ref{};
            for (std::size_t t = 0; t < n; ++t) {
                ref += x[t] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                  static_cast<double>((k * t) % n) /
                                                  static_cast<double>(n));
            }
            REQUIRE(std::abs(y[k] - ref) <= 1e-10 * static_cast<double>(n));
        }
    }
    std::vector<std::complex<double>> bad(12);
    CHECK_THROWS_AS(fft_in_place(bad), InvalidArgument);
}

TEST_CASE("magnitude_spectrum agrees with dft_oracle") {
    SUBCASE("reference signals") {
        const auto cfg = SamplingConfig::reference();
        for (const auto& signal : ts::reference_signals()) {
            const auto series = synthesize(signal, cfg);
            const auto fast = magnitude_spectrum(series);
            const auto slow = dft_oracle(series);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) {
                REQUIRE(ts::relative_difference(fast.magnitude(i), slow.magnitude(i)) <= 1e-9);
            }
        }
    }
    SUBCASE("random power-of-two signals") {
        std::mt19937_64 rng(42);
        for (std::size_t n = 4; n <= 256; n <<= 1) {
            for (int trial = 0; trial < 5; ++trial) {
                const SamplingConfig cfg(50.0, n, n / 2 + 1);
                const SampleSeries series(ts::random_samples(rng, n), cfg);
                const auto fast = magnitude_spectrum(series);
                const auto slow = dft_oracle(series);
                for (std::size_t i = 0; i < fast.size(); ++i) {
                    REQUIRE(ts::relative_difference(fast.magnitude(i), slow.magnitude(i)) <= 1e-9);
                }
            }
        }
    }
    SUBCASE("non-power-of-two falls back to direct summation") {
        std::mt19937_64 rng(9);
        const SamplingConfig cfg(30.0, 30, 16);
        const SampleSeries series(ts::random_samples(rng, 30), cfg);
        CHECK(magnitude_spectrum(series) == dft_oracle(series));
    }
}

TEST_CASE("magnitudes scale with |c|") {
    std::mt19937_64 rng(17);
    const SamplingConfig cfg(100.0, 128, 64);
    const SampleSeries series(ts::random_samples(rng, 128), cfg);
    const auto base = magnitude_spectrum(series);
    for (const double c : {-2.0, 0.5, 3.0}) {
        const auto scaled = magnitude_spectrum(series.scaled(c));
        for (std::size_t i = 0; i < base.size(); ++i) {
            REQUIRE(ts::relative_difference(scaled.magnitude(i), std::abs(c) * base.magnitude(i)) <= 1e-12);
        }
    }
}

TEST_CASE("axis convention only relabels frequencies") {
    const auto cfg = SamplingConfig::reference();
    const auto series = synthesize(ts::reference_signals()[0], cfg);
    const auto paper = magnitude_spectrum(series);
    const SampleSeries standard_series(
        std::vector<double>(series.values().begin(), series.values().end()),
        cfg.with_axis(AxisConvention::Standard));
    const auto standard = magnitude_spectrum(standard_series);

    CHECK(paper.magnitudes() == standard.magnitudes());
    CHECK(paper.resolution() == 100.0 / 255.0);
    CHECK(standard.resolution() == 100.0 / 256.0);
    CHECK(paper.size() == cfg.drawn_lines());
    CHECK(standard.size() == cfg.drawn_lines());
}

TEST_CASE("output length equals drawn lines") {
    std::mt19937_64 rng(4);
    for (std::size_t lines : {1u, 2u, 17u, 64u, 65u}) {
        const SamplingConfig cfg(10.0, 128, lines);
        const SampleSeries series(ts::random_samples(rng, 128), cfg);
        CHECK(magnitude_spectrum(series).size() == lines);
        CHECK(dft_oracle(series).size() == lines);
    }
}
