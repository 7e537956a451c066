#include "congruent/scenario.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "congruent/error.hpp"
#include "congruent/io.hpp"
#include "format.hpp"

namespace congruent {
namespace {

using nlohmann::json;

AxisConvention parse_axis(const std::string& text) {
    if (text == "paper") return AxisConvention::Paper;
    if (text == "standard") return AxisConvention::Standard;
    throw ScenarioError("axis must be 'paper' or 'standard', got '" + text + "'");
}

const char* axis_name(AxisConvention axis) {
    return axis == AxisConvention::Paper ? "paper" : "standard";
}

SamplingConfig parse_sampling(const json& j) {
    const auto ref = SamplingConfig::reference();
    const double rate = j.value("sample_rate", ref.sample_rate());
    const auto count = j.value("sample_count", ref.sample_count());
    const auto lines = j.value("drawn_lines", count / 2);
    const auto axis = parse_axis(j.value("axis", std::string("paper")));
    return {rate, count, lines, axis};
}

SignalSpec parse_signal(const json& j) {
    std::vector<SignalTerm> terms;
    for (const auto& t : j.at("terms")) {
        SignalTerm term;
        const auto shape = t.at("shape").get<std::string>();
        if (shape == "sin") {
            term.shape = Shape::Sin;
        } else if (shape == "cos") {
            term.shape = Shape::Cos;
        } else {
            throw ScenarioError("term shape must be 'sin' or 'cos', got '" + shape + "'");
        }
        term.sign = t.value("sign", 1);
        term.frequency = t.at("frequency").get<double>();
        term.amplitude = t.value("amplitude", 1.0);
        terms.push_back(term);
    }
    return SignalSpec(std::move(terms));
}

DivisionPolicy parse_division(const json& j) {
    const auto mode = j.value("mode", std::string("conditioned"));
    const double eps = j.value("epsilon", kDefaultDivisionEpsilon);
    if (mode == "plain") return {DivisionMode::Plain, eps};
    if (mode == "conditioned") return {DivisionMode::Conditioned, eps};
    throw ScenarioError("division mode must be 'plain' or 'conditioned', got '" + mode + "'");
}

Job parse_job(const json& j) {
    Job job;
    job.name = j.at("name").get<std::string>();
    job.k = j.value("k", std::size_t{3});
    job.exclude_dc = j.value("exclude_dc", true);
    job.normalize = j.value("normalize", false);

    const auto type = j.at("type").get<std::string>();
    if (type == "spectrum") {
        job.task = SpectrumJob{j.at("signal").get<std::string>()};
    } else if (type == "common") {
        job.task = CommonJob{j.at("signals").get<std::vector<std::string>>()};
    } else if (type == "non_common") {
        NonCommonJob task;
        task.emphasize = j.at("emphasize").get<std::vector<std::string>>();
        task.suppress = j.at("suppress").get<std::vector<std::string>>();
        if (j.contains("division")) {
            task.policy = parse_division(j.at("division"));
        }
        job.task = std::move(task);
    } else {
        throw ScenarioError("job '" + job.name + "': unknown type '" + type + "'");
    }
    return job;
}

json signal_to_json(const SignalSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.terms()) {
        terms.push_back({{"shape", t.shape == Shape::Sin ? "sin" : "cos"},
                         {"sign", t.sign},
                         {"frequency", t.frequency},
                         {"amplitude", t.amplitude}});
    }
    return {{"terms", terms}};
}

json job_to_json(const Job& job) {
    json j = {{"name", job.name}, {"k", job.k}, {"exclude_dc", job.exclude_dc},
              {"normalize", job.normalize}};
    std::visit(
        [&](const auto& task) {
            using T = std::decay_t<decltype(task)>;
            if constexpr (std::is_same_v<T, SpectrumJob>) {
                j["type"] = "spectrum";
                j["signal"] = task.signal;
            } else if constexpr (std::is_same_v<T, CommonJob>) {
                j["type"] = "common";
                j["signals"] = task.signals;
            } else {
                j["type"] = "non_common";
                j["emphasize"] = task.emphasize;
                j["suppress"] = task.suppress;
                j["division"] = {
                    {"mode", task.policy.mode() == DivisionMode::Plain ? "plain" : "conditioned"},
                    {"epsilon", task.policy.epsilon()}};
            }
        },
        job.task);
    return j;
}

bool safe_job_name(const std::string& name) {
    if (name.empty() || name.front() == '.') {
        return false;
    }
    for (const char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '_' || c == '-' || c == '.';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> referenced_names(const Job& job) {
    return std::visit(
        [](const auto& task) -> std::vector<std::string> {
            using T = std::decay_t<decltype(task)>;
            if constexpr (std::is_same_v<T, SpectrumJob>) {
                return {task.signal};
            } else if constexpr (std::is_same_v<T, CommonJob>) {
                return task.signals;
            } else {
                auto names = task.emphasize;
                names.insert(names.end(), task.suppress.begin(), task.suppress.end());
                return names;
            }
        },
        job.task);
}

/// Computes each named spectrum once, on first use.
class SpectrumCache {
public:
    explicit SpectrumCache(const ScenarioSpec& spec) : spec_(spec) {}

    const Spectrum& get(const std::string& name) {
        if (const auto it = cache_.find(name); it != cache_.end()) {
            return it->second;
        }
        if (const auto it = spec_.signals.find(name); it != spec_.signals.end()) {
            const auto series = synthesize(it->second, spec_.sampling);
            write_samples_csv(series, spec_.output_dir / (name + ".samples.csv"));
            return cache_.emplace(name, magnitude_spectrum(series)).first->second;
        }
        const auto& path = spec_.inputs.at(name);
        return cache_.emplace(name, magnitude_spectrum(read_samples_csv(path))).first->second;
    }

    std::vector<Spectrum> get_all(const std::vector<std::string>& names, bool normalize) {
        std::vector<Spectrum> out;
        out.reserve(names.size());
        for (const auto& name : names) {
            out.push_back(normalize ? normalize_max(get(name)) : get(name));
        }
        return out;
    }

private:
    const ScenarioSpec& spec_;
    std::map<std::string, Spectrum> cache_;
};

Spectrum evaluate(const Job& job, SpectrumCache& cache) {
    return std::visit(
        [&](const auto& task) -> Spectrum {
            using T = std::decay_t<decltype(task)>;
            if constexpr (std::is_same_v<T, SpectrumJob>) {
                const auto& s = cache.get(task.signal);
                return job.normalize ? normalize_max(s) : s;
            } else if constexpr (std::is_same_v<T, CommonJob>) {
                return product(cache.get_all(task.signals, job.normalize));
            } else {
                return group_contrast(cache.get_all(task.emphasize, job.normalize),
                                      cache.get_all(task.suppress, job.normalize), task.policy);
            }
        },
        job.task);
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view json_text) {
    try {
        const json root = json::parse(json_text);
        ScenarioSpec spec;
        spec.schema_version = root.at("schema_version").get<int>();
        if (root.contains("sampling")) {
            spec.sampling = parse_sampling(root.at("sampling"));
        }
        if (root.contains("signals")) {
            for (const auto& [name, value] : root.at("signals").items()) {
                spec.signals.emplace(name, parse_signal(value));
            }
        }
        if (root.contains("inputs")) {
            for (const auto& [name, value] : root.at("inputs").items()) {
                spec.inputs.emplace(name, value.get<std::string>());
            }
        }
        for (const auto& job : root.at("jobs")) {
            spec.jobs.push_back(parse_job(job));
        }
        spec.output_dir = root.value("output_dir", std::string("out"));
        return spec;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("invalid scenario JSON: ") + e.what());
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        throw ScenarioError(std::string("invalid scenario: ") + e.what());
    }
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open scenario '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ScenarioSpec spec;
    try {
        spec = parse_scenario(buffer.str());
    } catch (const ScenarioError& e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
    const auto base = path.parent_path();
    for (auto& [name, input] : spec.inputs) {
        if (input.is_relative()) {
            input = base / input;
        }
    }
    return spec;
}

std::string scenario_to_json(const ScenarioSpec& spec) {
    json root;
    root["schema_version"] = spec.schema_version;
    root["sampling"] = {{"sample_rate", spec.sampling.sample_rate()},
                        {"sample_count", spec.sampling.sample_count()},
                        {"drawn_lines", spec.sampling.drawn_lines()},
                        {"axis", axis_name(spec.sampling.axis())}};
    root["signals"] = json::object();
    for (const auto& [name, signal] : spec.signals) {
        root["signals"][name] = signal_to_json(signal);
    }
    root["inputs"] = json::object();
    for (const auto& [name, path] : spec.inputs) {
        root["inputs"][name] = path.generic_string();
    }
    root["jobs"] = json::array();
    for (const auto& job : spec.jobs) {
        root["jobs"].push_back(job_to_json(job));
    }
    root["output_dir"] = spec.output_dir.generic_string();
    return root.dump(2) + "\n";
}

void validate_scenario(const ScenarioSpec& spec) {
    if (spec.schema_version != kScenarioSchemaVersion) {
        throw ScenarioError("unsupported schema_version " + std::to_string(spec.schema_version));
    }
    if (spec.jobs.empty()) {
        throw ScenarioError("scenario has no jobs");
    }
    for (const auto& [name, path] : spec.inputs) {
        if (spec.signals.contains(name)) {
            throw ScenarioError("name '" + name + "' is both a signal and an input");
        }
    }
    std::set<std::string> seen;
    for (const auto& job : spec.jobs) {
        if (!safe_job_name(job.name)) {
            throw ScenarioError("job name '" + job.name +
                                "' must be non-empty and use only [A-Za-z0-9_.-]");
        }
        if (!seen.insert(job.name).second) {
            throw ScenarioError("duplicate job name '" + job.name + "'");
        }
        if (job.k == 0) {
            throw ScenarioError("job '" + job.name + "': k must be at least 1");
        }
        if (const auto* nc = std::get_if<NonCommonJob>(&job.task)) {
            if (nc->emphasize.empty() || nc->suppress.empty()) {
                throw ScenarioError("job '" + job.name + "': emphasize and suppress must be non-empty");
            }
        }
        const auto names = referenced_names(job);
        if (names.empty()) {
            throw ScenarioError("job '" + job.name + "' references no signals");
        }
        for (const auto& name : names) {
            if (!spec.signals.contains(name) && !spec.inputs.contains(name)) {
                throw ScenarioError("job '" + job.name + "' references unknown signal '" + name + "'");
            }
        }
    }
}

ScenarioReport run_scenario(const ScenarioSpec& spec) {
    validate_scenario(spec);

    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + spec.output_dir.string() + "'");
    }

    SpectrumCache cache(spec);
    ScenarioReport report;
    for (const auto& job : spec.jobs) {
        try {
            const auto spectrum = evaluate(job, cache);
            const auto detections = emphasized(spectrum, job.k, job.exclude_dc);

            JobSummary summary;
            summary.name = job.name;
            summary.spectrum_csv = spec.output_dir / (job.name + ".spectrum.csv");
            summary.detections_csv = spec.output_dir / (job.name + ".detections.csv");
            write_spectrum_csv(spectrum, summary.spectrum_csv);
            write_detections_csv(detections, summary.detections_csv);
            if (!detections.empty()) {
                summary.top = detections.front();
            }
            report.jobs.push_back(std::move(summary));
        } catch (const Error& e) {
            throw Error(e.kind(), "job '" + job.name + "': " + e.what());
        }
    }
    return report;
}

void print_summary(const ScenarioReport& report, std::ostream& out) {
    for (const auto& job : report.jobs) {
        out << job.name << ": ";
        if (job.top) {
            out << "bin=" << job.top->bin_index
                << " frequency_hz=" << detail::format_number(job.top->frequency)
                << " magnitude=" << detail::format_number(job.top->magnitude) << '\n';
        } else {
            out << "none\n";
        }
    }
}

}  // namespace congruent
