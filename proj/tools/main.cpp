// Command-line front end. Links only the public C API plus the local config
// parsing; all numerics live behind libspikecodec.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "spikecodec.h"

namespace fs = std::filesystem;
using spikecodec_cli::Config;

namespace {

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(1);
}

void check(sc_status status) {
    if (status != SC_OK) die(sc_last_error());
}

sc_signal_kind kind_from_name(const std::string& name) {
    if (name == "vibration") return SC_SIGNAL_VIBRATION;
    if (name == "trended") return SC_SIGNAL_TRENDED;
    if (name == "rectangular") return SC_SIGNAL_RECTANGULAR;
    if (name == "sinusoidal") return SC_SIGNAL_SINUSOIDAL;
    die("unknown signal kind: " + name);
}

sc_method method_from_name(const std::string& name) {
    if (name == "lif") return SC_METHOD_LIF;
    if (name == "sf") return SC_METHOD_SF;
    if (name == "pwm") return SC_METHOD_PWM;
    if (name == "bsa") return SC_METHOD_BSA;
    die("unknown method: " + name);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

struct ParamsDeleter {
    void operator()(sc_params* p) const { sc_params_destroy(p); }
};
using ParamsPtr = std::unique_ptr<sc_params, ParamsDeleter>;

ParamsPtr to_params(const std::map<std::string, std::string>& entries) {
    ParamsPtr params(sc_params_create());
    for (const auto& [key, value] : entries) {
        check(sc_params_set(params.get(), key.c_str(), value.c_str()));
    }
    return params;
}

std::map<std::string, std::string> from_params(const sc_params* params) {
    std::map<std::string, std::string> entries;
    for (size_t i = 0; i < sc_params_count(params); ++i) {
        const char* key = nullptr;
        const char* value = nullptr;
        check(sc_params_at(params, i, &key, &value));
        entries[key] = value;
    }
    return entries;
}

// Flags beat config values; config values beat defaults.
template <typename T>
void config_default(const CLI::Option* opt, const Config& config, const std::string& key, T& out) {
    if (opt->count() > 0) return;
    auto it = config.scalars.find(key);
    if (it == config.scalars.end()) return;
    std::istringstream in(it->second);
    in >> out;
    if (in.fail()) die("config key " + key + " has invalid value '" + it->second + "'");
}

Config load_config_if_set(const std::string& path) {
    if (path.empty()) return {};
    try {
        return spikecodec_cli::load_config(path);
    } catch (const std::exception& e) {
        die(e.what());
    }
}

/// Strips "<method>." prefixes, keeping only this method's override keys.
std::map<std::string, std::string> overrides_for_method(const Config& config,
                                                        const std::string& method) {
    std::map<std::string, std::string> out;
    const std::string prefix = method + ".";
    for (const auto& [key, value] : config.space_overrides) {
        if (key.rfind(prefix, 0) == 0) out[key.substr(prefix.size())] = value;
    }
    return out;
}

int cmd_generate(const std::string& kind, std::size_t length, std::size_t periods,
                 double noise_std, double trend_slope, std::uint64_t seed,
                 const std::string& out_dir, const std::string& output) {
    sc_generator_spec spec;
    sc_generator_spec_init(&spec, kind_from_name(kind));
    spec.length = length;
    spec.periods = periods;
    spec.noise_std = noise_std;
    spec.trend_slope = trend_slope;
    spec.seed = seed;

    sc_signal* sig = nullptr;
    check(sc_generate(&spec, &sig));

    fs::path path = output.empty() ? fs::path(out_dir) / ("signal_" + kind + ".csv")
                                   : fs::path(output);
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    check(sc_write_signal_csv(sig, path.string().c_str()));
    sc_signal_destroy(sig);
    std::cout << path.string() << "\n";
    return 0;
}

int cmd_encode(const std::string& method_name, const std::string& input,
               const std::string& params_path, const std::string& output) {
    const sc_method method = method_from_name(method_name);
    sc_signal* sig = nullptr;
    check(sc_read_signal_csv(input.c_str(), &sig));

    std::map<std::string, std::string> raw;
    try {
        raw = spikecodec_cli::read_kv_file(params_path);
    } catch (const std::exception& e) {
        die(e.what());
    }
    raw.erase("method");  // params files written by `optimize` may carry it
    const ParamsPtr params = to_params(raw);

    sc_spike_train* train = nullptr;
    check(sc_encode(method, sig, params.get(), &train));
    check(sc_write_spike_csv(train, output.c_str()));

    sc_params* meta = nullptr;
    check(sc_spike_train_meta(train, &meta));
    spikecodec_cli::write_kv_file(output + ".meta", from_params(meta));
    sc_params_destroy(meta);

    std::cout << output << "\n";
    sc_spike_train_destroy(train);
    sc_signal_destroy(sig);
    return 0;
}

int cmd_decode(const std::string& method_name, const std::string& input,
               const std::string& meta_path, const std::string& params_path,
               const std::string& output) {
    std::map<std::string, std::string> meta;
    const std::string resolved_meta = meta_path.empty() ? input + ".meta" : meta_path;
    try {
        meta = spikecodec_cli::read_kv_file(resolved_meta);
        if (!params_path.empty()) {
            for (const auto& [key, value] : spikecodec_cli::read_kv_file(params_path)) {
                meta[key] = value;
            }
        }
    } catch (const std::exception& e) {
        die(e.what());
    }
    if (!method_name.empty()) {
        auto it = meta.find("method");
        if (it != meta.end() && it->second != method_name) {
            die("--method " + method_name + " conflicts with metadata method " + it->second);
        }
        meta["method"] = method_name;
    }

    const ParamsPtr meta_params = to_params(meta);
    sc_spike_train* train = nullptr;
    check(sc_read_spike_csv(input.c_str(), meta_params.get(), &train));
    sc_signal* recon = nullptr;
    check(sc_decode(train, &recon));
    check(sc_write_signal_csv(recon, output.c_str()));
    std::cout << output << "\n";
    sc_signal_destroy(recon);
    sc_spike_train_destroy(train);
    return 0;
}

int cmd_optimize(const std::string& method_name, const std::string& input, std::size_t trials,
                 std::uint64_t seed, const std::string& out_dir, const Config& config) {
    const sc_method method = method_from_name(method_name);
    sc_signal* sig = nullptr;
    check(sc_read_signal_csv(input.c_str(), &sig));

    const ParamsPtr overrides = to_params(overrides_for_method(config, method_name));
    sc_opt_result* result = nullptr;
    check(sc_optimize(method, sig, trials, seed, overrides.get(), &result));

    fs::create_directories(out_dir);
    sc_params* best = nullptr;
    check(sc_opt_result_best_params(result, &best));
    auto best_entries = from_params(best);
    best_entries["method"] = method_name;
    spikecodec_cli::write_kv_file(fs::path(out_dir) / "best_params.txt", best_entries);
    sc_params_destroy(best);

    const fs::path trials_path = fs::path(out_dir) / "trials.csv";
    check(sc_opt_result_write_trials_csv(result, trials_path.string().c_str()));

    std::cout << "best_mse=" << sc_opt_result_best_mse(result) << "\n";
    sc_opt_result_destroy(result);
    sc_signal_destroy(sig);
    return 0;
}

int cmd_bench(const std::string& methods_csv, const std::string& signals_csv, std::size_t trials,
              std::size_t bsa_trials, std::size_t repeats, std::uint64_t seed, std::size_t length,
              std::size_t periods, double noise_std, double trend_slope,
              const std::string& out_dir, const Config& config) {
    std::vector<sc_method> methods;
    for (const auto& name : split_list(methods_csv)) methods.push_back(method_from_name(name));
    std::vector<sc_generator_spec> specs;
    for (const auto& name : split_list(signals_csv)) {
        sc_generator_spec spec;
        sc_generator_spec_init(&spec, kind_from_name(name));
        spec.length = length;
        spec.periods = periods;
        spec.noise_std = noise_std;
        spec.trend_slope = trend_slope;
        spec.seed = seed;
        specs.push_back(spec);
    }
    if (methods.empty() || specs.empty()) die("bench needs at least one method and one signal");

    sc_bench_config bench_config;
    sc_bench_config_init(&bench_config);
    bench_config.n_trials = trials;
    bench_config.bsa_n_trials = bsa_trials;
    bench_config.repeats = repeats;
    bench_config.seed = seed;

    const ParamsPtr overrides = to_params(config.space_overrides);
    sc_bench_report* report = nullptr;
    check(sc_bench_run(methods.data(), methods.size(), specs.data(), specs.size(), &bench_config,
                       overrides.get(), &report));
    check(sc_bench_report_write(report, out_dir.c_str()));

    const size_t failed = sc_bench_report_failed_count(report);
    if (failed > 0) {
        std::cerr << "bench: " << failed << " cell(s) failed; first failure: "
                  << sc_bench_report_first_failure(report) << "\n";
        sc_bench_report_destroy(report);
        return 1;
    }
    std::cout << "report written to " << out_dir << "\n";
    sc_bench_report_destroy(report);
    return 0;
}

void print_summary_table(const fs::path& path, const std::string& title) {
    std::ifstream in(path);
    if (!in) {
        std::cout << title << ": (missing " << path.string() << ")\n\n";
        return;
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(split_list(line));
    }
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= widths.size()) widths.push_back(0);
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::cout << title << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << (c == 0 ? "" : "  ");
            std::cout << row[c] << std::string(widths[c] - row[c].size(), ' ');
        }
        std::cout << "\n";
    }
    std::cout << "\n";
}

int cmd_report(const std::string& out_dir) {
    print_summary_table(fs::path(out_dir) / "reconstruction_error.csv",
                        "Reconstruction error (MSE)");
    print_summary_table(fs::path(out_dir) / "sparsity.csv", "Spike sparsity (%)");
    print_summary_table(fs::path(out_dir) / "timing.csv", "Median encode time (ms)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spikecodec: temporal spike encoding toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::size_t trials = 500;
    std::size_t repeats = 5;

    // generate
    auto* generate = app.add_subcommand("generate", "synthesize a benchmark signal as CSV");
    std::string gen_kind;
    std::size_t gen_length = 16384;
    std::size_t gen_periods = 8;
    double gen_noise_std = 0.1;
    double gen_trend_slope = 3.0;
    std::string gen_output;
    generate->add_option("--kind", gen_kind, "vibration|trended|rectangular|sinusoidal")
        ->required();
    auto* gen_length_opt = generate->add_option("--length", gen_length, "time steps");
    auto* gen_periods_opt = generate->add_option("--periods", gen_periods, "waveform periods");
    auto* gen_noise_opt = generate->add_option("--noise-std", gen_noise_std, "noise std dev");
    auto* gen_slope_opt = generate->add_option("--trend-slope", gen_trend_slope, "trend slope");
    auto* gen_seed_opt = generate->add_option("--seed", seed, "generator seed");
    auto* gen_out_opt = generate->add_option("--out-dir", out_dir, "output directory");
    generate->add_option("--output", gen_output, "explicit output file path");
    generate->add_option("--config", config_path, "config file");

    // encode
    auto* encode = app.add_subcommand("encode", "encode a signal CSV into a spike CSV");
    std::string enc_method, enc_input, enc_params, enc_output;
    encode->add_option("--method", enc_method, "lif|sf|pwm|bsa")->required();
    encode->add_option("--input", enc_input, "signal CSV (step,amplitude)")->required();
    encode->add_option("--params", enc_params, "key=value params file")->required();
    encode->add_option("--output", enc_output, "spike CSV path")->required();

    // decode
    auto* decode = app.add_subcommand("decode", "reconstruct a signal from a spike CSV");
    std::string dec_method, dec_input, dec_meta, dec_params, dec_output;
    decode->add_option("--method", dec_method, "lif|sf|pwm|bsa (checked against metadata)");
    decode->add_option("--input", dec_input, "spike CSV (step,spike)")->required();
    decode->add_option("--meta", dec_meta, "metadata file (default: <input>.meta)");
    decode->add_option("--params", dec_params, "key=value overrides");
    decode->add_option("--output", dec_output, "reconstruction CSV path")->required();

    // optimize
    auto* optimize = app.add_subcommand("optimize", "tune encoder parameters for a signal");
    std::string opt_method, opt_input;
    optimize->add_option("--method", opt_method, "lif|sf|pwm|bsa")->required();
    optimize->add_option("--input", opt_input, "signal CSV")->required();
    auto* opt_trials_opt = optimize->add_option("--trials", trials, "number of trials");
    auto* opt_seed_opt = optimize->add_option("--seed", seed, "search seed");
    auto* opt_out_opt = optimize->add_option("--out-dir", out_dir, "output directory");
    optimize->add_option("--config", config_path, "config file");

    // bench
    auto* bench = app.add_subcommand("bench", "run the full benchmark grid");
    std::string bench_methods = "lif,sf,pwm,bsa";
    std::string bench_signals = "vibration,trended,rectangular,sinusoidal";
    std::size_t bsa_trials = 1000;
    std::size_t bench_length = 16384;
    std::size_t bench_periods = 8;
    double bench_noise_std = 0.1;
    double bench_trend_slope = 3.0;
    bench->add_option("--methods", bench_methods, "comma-separated method list");
    bench->add_option("--signals", bench_signals, "comma-separated signal kinds");
    auto* bench_trials_opt = bench->add_option("--trials", trials, "trials per cell");
    bench->add_option("--bsa-trials", bsa_trials, "trials for BSA cells");
    auto* bench_repeats_opt = bench->add_option("--repeats", repeats, "timing repeats");
    auto* bench_seed_opt = bench->add_option("--seed", seed, "seed for generation and search");
    auto* bench_length_opt = bench->add_option("--length", bench_length, "signal length");
    auto* bench_periods_opt = bench->add_option("--periods", bench_periods, "waveform periods");
    auto* bench_noise_opt = bench->add_option("--noise-std", bench_noise_std, "noise std dev");
    auto* bench_slope_opt = bench->add_option("--trend-slope", bench_trend_slope, "trend slope");
    auto* bench_out_opt = bench->add_option("--out-dir", out_dir, "output directory");
    bench->add_option("--config", config_path, "config file");

    // report
    auto* report = app.add_subcommand("report", "print summary tables from a bench output dir");
    auto* report_out_opt = report->add_option("--out-dir", out_dir, "bench output directory");

    CLI11_PARSE(app, argc, argv);

    const Config config = load_config_if_set(config_path);

    if (generate->parsed()) {
        config_default(gen_seed_opt, config, "seed", seed);
        config_default(gen_out_opt, config, "out_dir", out_dir);
        config_default(gen_length_opt, config, "generator.length", gen_length);
        config_default(gen_periods_opt, config, "generator.periods", gen_periods);
        config_default(gen_noise_opt, config, "generator.noise_std", gen_noise_std);
        config_default(gen_slope_opt, config, "generator.trend_slope", gen_trend_slope);
        return cmd_generate(gen_kind, gen_length, gen_periods, gen_noise_std, gen_trend_slope,
                            seed, out_dir, gen_output);
    }
    if (encode->parsed()) {
        return cmd_encode(enc_method, enc_input, enc_params, enc_output);
    }
    if (decode->parsed()) {
        return cmd_decode(dec_method, dec_input, dec_meta, dec_params, dec_output);
    }
    if (optimize->parsed()) {
        config_default(opt_trials_opt, config, "trials", trials);
        config_default(opt_seed_opt, config, "seed", seed);
        config_default(opt_out_opt, config, "out_dir", out_dir);
        return cmd_optimize(opt_method, opt_input, trials, seed, out_dir, config);
    }
    if (bench->parsed()) {
        config_default(bench_trials_opt, config, "trials", trials);
        config_default(bench_repeats_opt, config, "repeats", repeats);
        config_default(bench_seed_opt, config, "seed", seed);
        config_default(bench_out_opt, config, "out_dir", out_dir);
        config_default(bench_length_opt, config, "generator.length", bench_length);
        config_default(bench_periods_opt, config, "generator.periods", bench_periods);
        config_default(bench_noise_opt, config, "generator.noise_std", bench_noise_std);
        config_default(bench_slope_opt, config, "generator.trend_slope", bench_trend_slope);
        return cmd_bench(bench_methods, bench_signals, trials, bsa_trials, repeats, seed,
                         bench_length, bench_periods, bench_noise_std, bench_trend_slope, out_dir,
                         config);
    }
    if (report->parsed()) {
        config_default(report_out_opt, config, "out_dir", out_dir);
        return cmd_report(out_dir);
    }
    return 0;
}
