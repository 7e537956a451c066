#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "congruent/algebra.hpp"
#include "congruent/detector.hpp"
#include "congruent/dsp.hpp"

namespace congruent {

inline constexpr int kScenarioSchemaVersion = 1;

struct SpectrumJob {
    std::string signal;
    friend bool operator==(const SpectrumJob&, const SpectrumJob&) = default;
};

struct CommonJob {
    std::vector<std::string> signals;
    friend bool operator==(const CommonJob&, const CommonJob&) = default;
};

struct NonCommonJob {
    std::vector<std::string> emphasize;
    std::vector<std::string> suppress;
    DivisionPolicy policy = DivisionPolicy::conditioned();
    friend bool operator==(const NonCommonJob&, const NonCommonJob&) = default;
};

struct Job {
    std::string name;
    std::variant<SpectrumJob, CommonJob, NonCommonJob> task;
    std::size_t k = 3;
    bool exclude_dc = true;
    bool normalize = false;  ///< normalize_max each input spectrum first

    friend bool operator==(const Job&, const Job&) = default;
};

/// Declarative description of a batch of spectra and detections.
///
/// Names used by jobs resolve either to a synthesized signal (`signals`,
/// sampled with `sampling`) or to an ingested samples CSV (`inputs`).
struct ScenarioSpec {
    int schema_version = kScenarioSchemaVersion;
    SamplingConfig sampling = SamplingConfig::reference();
    std::map<std::string, SignalSpec> signals;
    std::map<std::string, std::filesystem::path> inputs;
    std::vector<Job> jobs;
    std::filesystem::path output_dir = "out";

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// Throws ScenarioError on malformed JSON or schema violations. Does not
/// check cross references; see validate_scenario().
ScenarioSpec parse_scenario(std::string_view json_text);

/// Reads and parses a scenario file, then resolves relative `inputs` paths
/// against the file's directory. Throws IoError or ScenarioError.
ScenarioSpec load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const ScenarioSpec& spec);

/// Throws ScenarioError: empty job list, duplicate or unsafe job names,
/// unknown signal references, empty name lists, k == 0, wrong schema version.
void validate_scenario(const ScenarioSpec& spec);

struct JobSummary {
    std::string name;
    std::filesystem::path spectrum_csv;
    std::filesystem::path detections_csv;
    std::optional<DetectedFrequency> top;
};

struct ScenarioReport {
    std::vector<JobSummary> jobs;
};

/// Validates, then executes jobs in declared order. Each job writes
/// `<output_dir>/<name>.spectrum.csv` and `<output_dir>/<name>.detections.csv`;
/// every synthesized signal also gets `<output_dir>/<signal>.samples.csv`.
/// Library errors are rethrown with the job name prepended, kind preserved.
ScenarioReport run_scenario(const ScenarioSpec& spec);

/// One line per job: name, then the top detection (or "none").
void print_summary(const ScenarioReport& report, std::ostream& out);

}  // namespace congruent
