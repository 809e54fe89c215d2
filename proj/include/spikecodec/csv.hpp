#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spikecodec/optimizer.hpp"
#include "spikecodec/signal.hpp"

namespace spikecodec::csv {

// All files use comma separators, \n line endings, no trailing separator, and
// byte-exact headers. Writes go through a temp file + rename so a crashed run
// never leaves a truncated CSV behind.

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// Header `step,amplitude`, 1-based step.
void write_signal_csv(const Signal& signal, const std::filesystem::path& path);
Signal read_signal_csv(const std::filesystem::path& path);

/// Header `step,spike`, integer spikes.
void write_spike_csv(const SpikeTrain& spikes, const std::filesystem::path& path);
std::vector<std::int8_t> read_spike_values_csv(const std::filesystem::path& path);

/// Header `step,original,reconstructed,mse`; the mse column is the running
/// mean squared error, so its last row equals mse(original, reconstructed).
void write_feature_csv(const Signal& original, const Signal& reconstructed,
                       const std::filesystem::path& path);

/// Header `trial,mse,<param columns>` with 1-based trial numbers.
void write_trials_csv(const OptimizationResult& result, const std::filesystem::path& path);

}  // namespace spikecodec::csv
