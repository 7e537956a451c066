#include <doctest.h>

#include <algorithm>
#include <string>

#include "congruent/dsp.hpp"
#include "congruent/io.hpp"
#include "support/reference.hpp"
#include "support/run.hpp"
#include "support/temp_dir.hpp"

using namespace congruent;
namespace ts = testing_support;

namespace {

const std::string kExe = SPECTRA_EXE;
const std::string kScenarios = SCENARIO_DIR;

int spectra(const std::string& args, const std::filesystem::path& stdout_path,
            const std::filesystem::path& stderr_path) {
    return ts::run(ts::quote(kExe) + " " + args + " > " + ts::quote(stdout_path.string()) + " 2> " +
                   ts::quote(stderr_path.string()));
}

struct Workspace {
    ts::TempDir dir;
    std::filesystem::path out = dir / "stdout.txt";
    std::filesystem::path err = dir / "stderr.txt";

    Workspace() {
        const auto signals = ts::reference_signals();
        for (std::size_t i = 0; i < signals.size(); ++i) {
            write_samples_csv(synthesize(signals[i], SamplingConfig::reference()),
                              sample(i + 1));
        }
    }
    std::filesystem::path sample(std::size_t i) const {
        return dir / ("s" + std::to_string(i) + ".csv");
    }
    std::string arg(std::size_t i) const { return ts::quote(sample(i).string()); }
    int operator()(const std::string& args) const { return spectra(args, out, err); }
    std::string stdout_text() const { return ts::read_text(out); }
    std::string stderr_text() const { return ts::read_text(err); }
};

}  // namespace

TEST_CASE("synth runs a bundled scenario") {
    Workspace w;
    const auto out_dir = w.dir / "fig";
    REQUIRE(w("synth --scenario " + ts::quote(kScenarios + "/figures_1_to_4.json") + " --out " +
              ts::quote(out_dir.string())) == 0);
    CHECK(w.stdout_text().find("S1_times_S2: bin=33 ") != std::string::npos);
    CHECK(std::filesystem::exists(out_dir / "S1_over_S2.spectrum.csv"));
    CHECK(std::filesystem::exists(out_dir / "s2.samples.csv"));
}

TEST_CASE("analyze --common") {
    Workspace w;
    REQUIRE(w("analyze --common " + w.arg(1) + " " + w.arg(2) + " -k 1") == 0);
    CHECK(w.stdout_text().rfind("rank,bin,frequency_hz,magnitude\n1,33,", 0) == 0);

    REQUIRE(w("analyze --common " + w.arg(4) + " " + w.arg(5) + " -k 2") == 0);
    const auto text = w.stdout_text();
    CHECK(text.find("\n1,59,") != std::string::npos);
    CHECK(text.find("\n2,44,") != std::string::npos);
}

TEST_CASE("analyze --keep-dc and --spectrum-out") {
    Workspace w;
    const auto spectrum = w.dir / "prod.csv";
    REQUIRE(w("analyze --common " + w.arg(1) + " -k 200 --keep-dc --spectrum-out " +
              ts::quote(spectrum.string())) == 0);
    // 128 lines, all eligible with DC kept
    const auto text = w.stdout_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == 129);
    CHECK(read_spectrum_csv(spectrum).size() == 128);
}

TEST_CASE("analyze --emphasize/--suppress") {
    Workspace w;
    REQUIRE(w("analyze --emphasize " + w.arg(2) + " --suppress " + w.arg(1) + " -k 2 --epsilon 1e-6") == 0);
    CHECK(w.stdout_text().find("\n1,18,") != std::string::npos);
    CHECK(w.stdout_text().find("\n2,59,") != std::string::npos);

    REQUIRE(w("analyze --emphasize " + w.arg(4) + " " + w.arg(5) + " --suppress " + w.arg(1) + " " +
              w.arg(2) + " " + w.arg(3) + " -k 1 --plain-division") == 0);
    CHECK(w.stdout_text().find("\n1,127,") != std::string::npos);
}

TEST_CASE("fft prints the spectrum") {
    Workspace w;
    REQUIRE(w("fft " + w.arg(1)) == 0);
    auto text = w.stdout_text();
    CHECK(text.rfind("bin,frequency_hz,magnitude\n0,0,", 0) == 0);
    CHECK(text.find("\n1,0.392156863,") != std::string::npos);

    REQUIRE(w("fft " + w.arg(1) + " --axis standard") == 0);
    text = w.stdout_text();
    CHECK(text.find("\n1,0.390625,") != std::string::npos);
}

TEST_CASE("exit codes") {
    Workspace w;
    SUBCASE("I/O error: missing input") {
        CHECK(w("fft " + ts::quote((w.dir / "absent.csv").string())) == 4);
        CHECK(w.stderr_text().find("absent.csv") != std::string::npos);
    }
    SUBCASE("validation: malformed CSV names file and line") {
        const auto bad = w.dir / "bad.csv";
        ts::write_text(bad, "# sample_rate=100\n0,1\nabc,1.0\n");
        CHECK(w("fft " + ts::quote(bad.string())) == 2);
        CHECK(w.stderr_text().find("bad.csv:3") != std::string::npos);
    }
    SUBCASE("validation: bad flags") {
        CHECK(w("fft " + w.arg(1) + " --axis sideways") == 2);
        CHECK(w("analyze --emphasize " + w.arg(1)) == 2);
        CHECK(w("analyze") == 2);
        CHECK(w("") == 2);
    }
    SUBCASE("validation: empty job list") {
        const auto sc = w.dir / "empty.json";
        ts::write_text(sc, R"({"schema_version": 1, "jobs": []})");
        CHECK(w("synth --scenario " + ts::quote(sc.string()) + " --out " +
                ts::quote((w.dir / "o").string())) == 2);
        CHECK_FALSE(std::filesystem::exists(w.dir / "o"));
    }
    SUBCASE("validation: incongruent inputs") {
        write_samples_csv(synthesize(ts::reference_signals()[0], SamplingConfig(100.0, 128, 64)),
                          w.dir / "short.csv");
        CHECK(w("analyze --common " + w.arg(1) + " " + ts::quote((w.dir / "short.csv").string())) == 2);
    }
    SUBCASE("numeric precondition: plain division by zero") {
        const auto flat = w.dir / "flat.csv";
        write_samples_csv(SampleSeries(std::vector<double>(256, 0.0), SamplingConfig::reference()), flat);
        CHECK(w("analyze --emphasize " + w.arg(1) + " --suppress " + ts::quote(flat.string()) +
                " --plain-division") == 3);
        CHECK(w.stderr_text().find("index 0") != std::string::npos);
    }
    SUBCASE("help") {
        CHECK(w("--help") == 0);
    }
}
