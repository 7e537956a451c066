// spectra: common / non-common frequency detection over congruent spectra.
//
//   spectra synth   --scenario <file.json> [--out <dir>]
//   spectra analyze --common a.csv b.csv [...] [-k 3] [--keep-dc]
//   spectra analyze --emphasize a.csv ... --suppress c.csv ... [-k 3]
//                   [--epsilon 1e-6] [--plain-division]
//   spectra fft     in.csv [--axis paper|standard]
//
// Exit codes: 0 success, 2 validation error, 3 numeric precondition error,
// 4 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congruent/algebra.hpp"
#include "congruent/detector.hpp"
#include "congruent/dsp.hpp"
#include "congruent/error.hpp"
#include "congruent/io.hpp"
#include "congruent/scenario.hpp"

namespace fs = std::filesystem;
using namespace congruent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation: return kExitValidation;
        case ErrorKind::Numeric: return kExitNumeric;
        case ErrorKind::Io: return kExitIo;
    }
    return kExitValidation;
}

std::vector<Spectrum> load_spectra(const std::vector<std::string>& paths, bool normalize) {
    std::vector<Spectrum> out;
    out.reserve(paths.size());
    for (const auto& path : paths) {
        try {
            auto s = magnitude_spectrum(read_samples_csv(path));
            out.push_back(normalize ? normalize_max(s) : std::move(s));
        } catch (const Error& e) {
            // Name the file; read_samples_csv already does, the transform does not.
            const std::string what = e.what();
            if (what.find(path) == std::string::npos) {
                throw Error(e.kind(), path + ": " + what);
            }
            throw;
        }
    }
    return out;
}

template <typename Writer>
void emit(const std::optional<std::string>& path, Writer&& writer) {
    if (!path) {
        writer(std::cout);
        return;
    }
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + *path + "' for writing");
    }
    writer(out);
    if (!out.flush()) {
        throw IoError("failed writing '" + *path + "'");
    }
}

struct AnalyzeOptions {
    std::vector<std::string> common;
    std::vector<std::string> emphasize;
    std::vector<std::string> suppress;
    std::size_t k = 3;
    bool keep_dc = false;
    double epsilon = kDefaultDivisionEpsilon;
    bool plain_division = false;
    bool normalize = false;
    std::optional<std::string> out;
    std::optional<std::string> spectrum_out;
};

void run_analyze(const AnalyzeOptions& opt) {
    if (opt.common.empty() == opt.emphasize.empty()) {
        throw InvalidArgument("analyze needs exactly one of --common or --emphasize");
    }
    if (!opt.emphasize.empty() && opt.suppress.empty()) {
        throw InvalidArgument("--emphasize requires --suppress");
    }
    if (!opt.common.empty() && !opt.suppress.empty()) {
        throw InvalidArgument("--suppress cannot be combined with --common");
    }

    Spectrum result = [&] {
        if (!opt.common.empty()) {
            return product(load_spectra(opt.common, opt.normalize));
        }
        const DivisionPolicy policy = opt.plain_division ? DivisionPolicy(DivisionMode::Plain, opt.epsilon)
                                                         : DivisionPolicy::conditioned(opt.epsilon);
        return group_contrast(load_spectra(opt.emphasize, opt.normalize),
                              load_spectra(opt.suppress, opt.normalize), policy);
    }();

    const auto detections = emphasized(result, opt.k, !opt.keep_dc);
    if (opt.spectrum_out) {
        write_spectrum_csv(result, *opt.spectrum_out);
    }
    emit(opt.out, [&](std::ostream& os) { format_detections_csv(detections, os); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common and non-common frequency detection in congruent discrete spectra"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Run a scenario file");
    std::string scenario_path;
    std::optional<std::string> synth_out;
    synth->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    synth->add_option("--out", synth_out, "Output directory (overrides the scenario's output_dir)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Detect common or non-common frequencies in sample CSVs");
    AnalyzeOptions analyze_opt;
    auto* common_opt = analyze->add_option("--common", analyze_opt.common, "Samples CSVs whose common frequencies to find");
    auto* emphasize_opt = analyze->add_option("--emphasize", analyze_opt.emphasize, "Samples CSVs whose frequencies to emphasize");
    analyze->add_option("--suppress", analyze_opt.suppress, "Samples CSVs whose frequencies to suppress");
    common_opt->excludes(emphasize_opt);
    analyze->add_option("-k", analyze_opt.k, "Number of detections to report")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--keep-dc", analyze_opt.keep_dc, "Allow bin 0 in the detections");
    analyze->add_option("--epsilon", analyze_opt.epsilon, "Conditioned division threshold")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--plain-division", analyze_opt.plain_division, "Use unconditioned division");
    analyze->add_flag("--normalize", analyze_opt.normalize, "Scale each input spectrum to a maximum of 1");
    analyze->add_option("--out", analyze_opt.out, "Detections CSV path (default: stdout)");
    analyze->add_option("--spectrum-out", analyze_opt.spectrum_out, "Also write the combined spectrum CSV");

    // fft
    auto* fft = app.add_subcommand("fft", "Magnitude spectrum of one samples CSV");
    std::string fft_input;
    std::optional<std::string> fft_axis;
    std::optional<std::string> fft_out;
    fft->add_option("input", fft_input, "Samples CSV")->required();
    fft->add_option("--axis", fft_axis, "Frequency axis convention")
        ->check(CLI::IsMember({"paper", "standard"}));
    fft->add_option("--out", fft_out, "Spectrum CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*synth) {
            auto spec = load_scenario(scenario_path);
            if (synth_out) {
                spec.output_dir = *synth_out;
            }
            const auto report = run_scenario(spec);
            print_summary(report, std::cout);
        } else if (*analyze) {
            run_analyze(analyze_opt);
        } else if (*fft) {
            auto series = read_samples_csv(fft_input);
            if (fft_axis) {
                const auto axis = *fft_axis == "paper" ? AxisConvention::Paper : AxisConvention::Standard;
                series = SampleSeries(std::vector<double>(series.values().begin(), series.values().end()),
                                      series.config().with_axis(axis));
            }
            const auto spectrum = magnitude_spectrum(series);
            emit(fft_out, [&](std::ostream& os) { format_spectrum_csv(spectrum, os); });
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
