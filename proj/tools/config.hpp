#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

// Flat key=value config and params files. Keys use dotted section prefixes
// (e.g. bsa.threshold.low=0.001); unknown keys are rejected so typos fail
// loudly instead of being silently ignored.

namespace spikecodec_cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    // seed, trials, repeats, out_dir, generator.*
    std::map<std::string, std::string> scalars;
    // method-prefixed search-space overrides, e.g. "sf.threshold.low"
    std::map<std::string, std::string> space_overrides;
};

Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// Plain key=value file, one entry per line ('#' starts a comment).
std::map<std::string, std::string> read_kv_file(const std::filesystem::path& path);
void write_kv_file(const std::filesystem::path& path,
                   const std::map<std::string, std::string>& entries);

}  // namespace spikecodec_cli
