#include "config.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace spikecodec_cli {

namespace {

constexpr std::array<std::string_view, 8> kScalarKeys = {
    "seed",           "trials",           "repeats",
    "out_dir",        "generator.length", "generator.periods",
    "generator.noise_std", "generator.trend_slope"};

constexpr std::array<std::string_view, 8> kSpaceParams = {
    "sf.threshold",  "lif.threshold", "lif.membrane_constant", "pwm.frequency",
    "pwm.downspike", "bsa.filter_order", "bsa.filter_cutoff", "bsa.threshold"};

bool is_space_override(std::string_view key) {
    for (std::string_view param : kSpaceParams) {
        if (key == param) return true;
        const std::string base(param);
        if (key == base + ".low" || key == base + ".high" || key == base + ".log") return true;
    }
    return false;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Config parse_config(std::string_view text) {
    Config config;
    std::size_t line_number = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_number) +
                              ": expected key=value, got '" + std::string(stripped) + "'");
        }
        const std::string key(trim(stripped.substr(0, eq)));
        const std::string value(trim(stripped.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_number) + ": empty key");
        }

        bool scalar = false;
        for (std::string_view known : kScalarKeys) {
            if (key == known) {
                scalar = true;
                break;
            }
        }
        if (scalar) {
            config.scalars[key] = value;
        } else if (is_space_override(key)) {
            config.space_overrides[key] = value;
        } else {
            throw ConfigError("config line " + std::to_string(line_number) + ": unknown key '" +
                              key + "'");
        }
    }
    return config;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::map<std::string, std::string> read_kv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::map<std::string, std::string> entries;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(path.string() + " line " + std::to_string(line_number) +
                              ": expected key=value");
        }
        entries[std::string(trim(stripped.substr(0, eq)))] =
            std::string(trim(stripped.substr(eq + 1)));
    }
    return entries;
}

void write_kv_file(const std::filesystem::path& path,
                   const std::map<std::string, std::string>& entries) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write " + tmp.string());
        for (const auto& [key, value] : entries) {
            out << key << '=' << value << '\n';
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw ConfigError("cannot rename " + tmp.string());
}

}  // namespace spikecodec_cli
