#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "congruent/algebra.hpp"
#include "congruent/detector.hpp"
#include "congruent/dsp.hpp"

using namespace congruent;

namespace {

SampleSeries random_series(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> values(n);
    for (auto& v : values) v = dist(rng);
    return {std::move(values), SamplingConfig(100.0, n, n / 2)};
}

std::vector<Spectrum> random_spectra(std::size_t count, std::size_t lines) {
    std::mt19937_64 rng(count * 31 + lines);
    std::uniform_real_distribution<double> dist(1e-3, 1.0);
    std::vector<Spectrum> out;
    for (std::size_t m = 0; m < count; ++m) {
        std::vector<double> v(lines);
        for (auto& x : v) x = dist(rng);
        out.push_back(make_spectrum(v, 0.25));
    }
    return out;
}

}  // namespace

static void MagnitudeSpectrumRadix2(benchmark::State& state) {
    const auto series = random_series(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(magnitude_spectrum(series));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MagnitudeSpectrumRadix2)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

static void DftOracle(benchmark::State& state) {
    const auto series = random_series(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dft_oracle(series));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DftOracle)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void CommonFrequencies(benchmark::State& state) {
    const auto spectra = random_spectra(static_cast<std::size_t>(state.range(0)), 4096);
    for (auto _ : state) {
        benchmark::DoNotOptimize(common_frequencies(spectra, 5));
    }
}
BENCHMARK(CommonFrequencies)->DenseRange(2, 8, 2);

static void GroupContrastConditioned(benchmark::State& state) {
    const auto spectra = random_spectra(5, static_cast<std::size_t>(state.range(0)));
    const std::span<const Spectrum> all(spectra);
    const auto policy = DivisionPolicy::conditioned();
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_contrast(all.first(3), all.subspan(3), policy));
    }
}
BENCHMARK(GroupContrastConditioned)->RangeMultiplier(8)->Range(128, 1 << 16);

BENCHMARK_MAIN();
