#include "congruent/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "congruent/error.hpp"
#include "format.hpp"

namespace congruent {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<std::size_t> parse_index(std::string_view text) {
    text = trim(text);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

template <typename Writer>
void write_atomically(const std::filesystem::path& path, Writer&& writer) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        writer(out);
        out.flush();
        if (!out) {
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

}  // namespace

SampleSeries read_samples_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    const std::string name = path.string();

    std::map<std::string, std::string, std::less<>> headers;
    std::vector<double> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto body = trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq != std::string_view::npos) {
                headers[std::string(trim(body.substr(0, eq)))] = std::string(trim(body.substr(eq + 1)));
            }
            continue;
        }
        if (values.empty() && line == "index,value") {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 2) {
            throw MalformedCsv(name, line_no, "expected 2 fields 'index,value'");
        }
        const auto index = parse_index(fields[0]);
        if (!index) {
            throw MalformedCsv(name, line_no, "index is not a non-negative integer");
        }
        if (*index != values.size()) {
            throw MalformedCsv(name, line_no,
                               "expected index " + std::to_string(values.size()) + ", got " +
                                   std::to_string(*index));
        }
        const auto value = detail::parse_double(fields[1]);
        if (!value || !std::isfinite(*value)) {
            throw MalformedCsv(name, line_no, "value is not a finite number");
        }
        values.push_back(*value);
    }

    const auto rate_it = headers.find("sample_rate");
    if (rate_it == headers.end()) {
        throw MissingHeader(name, "sample_rate");
    }
    const auto rate = detail::parse_double(rate_it->second);
    if (!rate) {
        throw MalformedCsv(name, 0, "sample_rate header is not a number");
    }

    AxisConvention axis = AxisConvention::Paper;
    if (const auto it = headers.find("axis"); it != headers.end()) {
        if (it->second == "standard") {
            axis = AxisConvention::Standard;
        } else if (it->second != "paper") {
            throw MalformedCsv(name, 0, "axis header must be 'paper' or 'standard'");
        }
    }

    if (const auto it = headers.find("sample_count"); it != headers.end()) {
        const auto declared = parse_index(it->second);
        if (!declared) {
            throw MalformedCsv(name, 0, "sample_count header is not an integer");
        }
        if (*declared != values.size()) {
            throw LengthMismatch(name, *declared, values.size());
        }
    }
    if (values.size() < 2) {
        throw TooFewSamples(values.size());
    }

    std::size_t drawn = values.size() / 2;
    if (const auto it = headers.find("drawn_lines"); it != headers.end()) {
        const auto declared = parse_index(it->second);
        if (!declared) {
            throw MalformedCsv(name, 0, "drawn_lines header is not an integer");
        }
        drawn = *declared;
    }

    SamplingConfig config(*rate, values.size(), drawn, axis);
    return {std::move(values), config};
}

void write_samples_csv(const SampleSeries& series, const std::filesystem::path& path) {
    const auto& config = series.config();
    write_atomically(path, [&](std::ostream& out) {
        out << "# sample_rate=" << detail::format_number(config.sample_rate(), 17) << '\n'
            << "# axis=" << (config.axis() == AxisConvention::Paper ? "paper" : "standard") << '\n'
            << "# sample_count=" << config.sample_count() << '\n'
            << "# drawn_lines=" << config.drawn_lines() << '\n'
            << "index,value\n";
        const auto values = series.values();
        for (std::size_t i = 0; i < values.size(); ++i) {
            // Full precision so that re-ingested samples reproduce the spectrum.
            out << i << ',' << detail::format_number(values[i], 17) << '\n';
        }
    });
}

void format_spectrum_csv(const Spectrum& s, std::ostream& out) {
    out << "bin,frequency_hz,magnitude\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << i << ',' << detail::format_number(s.frequency(i)) << ','
            << detail::format_number(s.magnitude(i)) << '\n';
    }
}

void format_detections_csv(std::span<const DetectedFrequency> detections, std::ostream& out) {
    out << "rank,bin,frequency_hz,magnitude\n";
    for (const auto& d : detections) {
        out << d.rank << ',' << d.bin_index << ',' << detail::format_number(d.frequency) << ','
            << detail::format_number(d.magnitude) << '\n';
    }
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
    write_atomically(path, [&](std::ostream& out) { format_spectrum_csv(s, out); });
}

void write_detections_csv(std::span<const DetectedFrequency> detections,
                          const std::filesystem::path& path) {
    write_atomically(path, [&](std::ostream& out) { format_detections_csv(detections, out); });
}

Spectrum read_spectrum_csv(const std::filesystem::path& path, std::optional<double> resolution) {
    auto in = open_for_read(path);
    const std::string name = path.string();

    std::vector<double> magnitudes;
    double last_frequency = 0.0;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (!seen_header) {
            if (line != "bin,frequency_hz,magnitude") {
                throw MalformedCsv(name, line_no, "expected header 'bin,frequency_hz,magnitude'");
            }
            seen_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw MalformedCsv(name, line_no, "expected 3 fields");
        }
        const auto bin = parse_index(fields[0]);
        const auto frequency = detail::parse_double(fields[1]);
        const auto magnitude = detail::parse_double(fields[2]);
        if (!bin || *bin != magnitudes.size() || !frequency || !magnitude) {
            throw MalformedCsv(name, line_no, "bad spectrum row");
        }
        last_frequency = *frequency;
        magnitudes.push_back(*magnitude);
    }
    if (!seen_header) {
        throw MalformedCsv(name, line_no, "empty file");
    }
    if (!resolution) {
        if (magnitudes.size() < 2) {
            throw MalformedCsv(name, line_no, "cannot infer resolution from fewer than 2 lines");
        }
        resolution = last_frequency / static_cast<double>(magnitudes.size() - 1);
    }
    return make_spectrum(magnitudes, *resolution);
}

}  // namespace congruent
