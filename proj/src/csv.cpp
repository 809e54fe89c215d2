#include "spikecodec/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace spikecodec::csv {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double_field(const std::string& field, std::size_t line_number,
                          const std::string& column) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || p != field.data() + field.size()) {
        throw ParseError("invalid " + column + " value '" + field + "'", line_number);
    }
    return v;
}

long long parse_int_field(const std::string& field, std::size_t line_number,
                          const std::string& column) {
    long long v = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || p != field.data() + field.size()) {
        throw ParseError("invalid " + column + " value '" + field + "'", line_number);
    }
    return v;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void check_header(const std::vector<std::string>& lines, std::string_view expected,
                  const std::filesystem::path& path) {
    if (lines.empty()) throw ParseError("empty file " + path.string(), 1);
    if (lines.front() != expected) {
        throw ParseError("expected header '" + std::string(expected) + "', got '" + lines.front() +
                             "'",
                         1);
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string());
}

void write_signal_csv(const Signal& signal, const std::filesystem::path& path) {
    std::string out = "step,amplitude\n";
    for (std::size_t i = 0; i < signal.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(signal[i]);
        out += '\n';
    }
    atomic_write_file(path, out);
}

Signal read_signal_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    check_header(lines, "step,amplitude", path);
    std::vector<double> samples;
    samples.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_number = i + 1;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 2) {
            throw ParseError("expected 2 fields, got " + std::to_string(fields.size()),
                             line_number);
        }
        const long long step = parse_int_field(fields[0], line_number, "step");
        if (step != static_cast<long long>(i)) {
            throw ParseError("expected step " + std::to_string(i), line_number);
        }
        samples.push_back(parse_double_field(fields[1], line_number, "amplitude"));
    }
    if (samples.empty()) throw ParseError("no data rows in " + path.string(), 1);
    return Signal(std::move(samples));
}

void write_spike_csv(const SpikeTrain& spikes, const std::filesystem::path& path) {
    std::string out = "step,spike\n";
    for (std::size_t i = 0; i < spikes.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += std::to_string(static_cast<int>(spikes[i]));
        out += '\n';
    }
    atomic_write_file(path, out);
}

std::vector<std::int8_t> read_spike_values_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    check_header(lines, "step,spike", path);
    std::vector<std::int8_t> spikes;
    spikes.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_number = i + 1;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 2) {
            throw ParseError("expected 2 fields, got " + std::to_string(fields.size()),
                             line_number);
        }
        const long long step = parse_int_field(fields[0], line_number, "step");
        if (step != static_cast<long long>(i)) {
            throw ParseError("expected step " + std::to_string(i), line_number);
        }
        const long long value = parse_int_field(fields[1], line_number, "spike");
        if (value < -1 || value > 1) {
            throw ParseError("spike value out of {-1,0,1}", line_number);
        }
        spikes.push_back(static_cast<std::int8_t>(value));
    }
    return spikes;
}

void write_feature_csv(const Signal& original, const Signal& reconstructed,
                       const std::filesystem::path& path) {
    const Signal errors = running_mse(original, reconstructed);
    std::string out = "step,original,reconstructed,mse\n";
    for (std::size_t i = 0; i < original.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(original[i]);
        out += ',';
        out += format_double(reconstructed[i]);
        out += ',';
        out += format_double(errors[i]);
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_trials_csv(const OptimizationResult& result, const std::filesystem::path& path) {
    std::string out = "trial,mse";
    if (!result.trials.empty()) {
        for (const auto& [key, value] : result.trials.front().params) {
            (void)value;
            out += ',';
            out += key;
        }
    }
    out += '\n';
    for (std::size_t i = 0; i < result.trials.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(result.trials[i].mse);
        for (const auto& [key, value] : result.trials[i].params) {
            (void)key;
            out += ',';
            out += param_value_to_string(value);
        }
        out += '\n';
    }
    atomic_write_file(path, out);
}

}  // namespace spikecodec::csv
