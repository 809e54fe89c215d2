#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spikecodec/generators.hpp"
#include "spikecodec/optimizer.hpp"

namespace spikecodec {

struct BenchConfig {
    std::size_t n_trials = 500;
    // BSA gets a larger random-search budget; its three interacting
    // parameters need more samples to cover.
    std::size_t bsa_n_trials = 1000;
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
};

struct BenchCell {
    Method method;
    GeneratorSpec spec;
    std::size_t signal_index = 0;  // into BenchmarkReport::signals
    bool failed = false;
    std::string error;
    ParamSet best_params;
    double mse = 0.0;
    double sparsity_pct = 0.0;
    double encode_ms = 0.0;  // median over repeats, encode only
    std::optional<Signal> reconstruction;
};

struct BenchmarkReport {
    std::vector<Signal> signals;  // one per requested spec
    std::vector<GeneratorSpec> specs;
    std::vector<Method> methods;
    std::vector<BenchCell> cells;  // signal-major, method order within
    BenchConfig config;
    std::string timestamp;  // ISO-8601 UTC
};

struct MethodMeans {
    Method method;
    double mean_mse = 0.0;
    double mean_sparsity_pct = 0.0;
};

/// Optimizes and evaluates every (method, signal) cell. A failing cell is
/// marked failed with its error message; the rest of the grid still runs.
/// Timing is the median of `repeats` runs of the encode call alone, on
/// pre-normalized input where the method normalizes.
BenchmarkReport run_benchmark(const std::vector<Method>& methods,
                              const std::vector<GeneratorSpec>& specs, const BenchConfig& config);

/// Same, with method-prefixed search-space overrides (e.g. "bsa.threshold.low").
BenchmarkReport run_benchmark_with_overrides(
    const std::vector<Method>& methods, const std::vector<GeneratorSpec>& specs,
    const BenchConfig& config, const std::map<std::string, std::string>& space_overrides);

/// Per-method arithmetic means over the non-failed cells.
std::vector<MethodMeans> mean_rows(const BenchmarkReport& report);

std::size_t failed_cell_count(const BenchmarkReport& report);
std::string first_failure(const BenchmarkReport& report);  // empty when clean

/// Writes signal_<kind>.csv, reconstruction_feature_<k>.csv, manifest.csv and
/// the summary files (reconstruction_error.csv, sparsity.csv, timing.csv)
/// plus bench_environment.txt into out_dir. When a single signal was
/// benchmarked, feature indices follow the fixed ordering 1=LIF, 2=SF,
/// 3=PWM, 4=BSA; otherwise they are sequential and manifest.csv maps them.
void write_report(const BenchmarkReport& report, const std::filesystem::path& out_dir);

}  // namespace spikecodec
