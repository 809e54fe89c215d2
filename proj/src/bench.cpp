#include "spikecodec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

#include "spikecodec/csv.hpp"

namespace spikecodec {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Times just the encode call (normalization pre-applied outside the timer).
double time_encode_ms(Method method, const Signal& signal, const MethodParams& params,
                      std::size_t repeats) {
    using clock = std::chrono::steady_clock;
    std::vector<double> runs;
    runs.reserve(repeats);

    std::vector<double> prepared;
    switch (method) {
        case Method::SF:
            break;
        case Method::LIF: {
            auto [unit, record] = min_max_normalize(signal);
            (void)record;
            prepared.reserve(unit.size());
            for (double s : unit.samples()) prepared.push_back(s * 2.0 - 1.0);
            break;
        }
        case Method::PWM:
        case Method::BSA:
            prepared = min_max_normalize(signal).first.samples();
            break;
    }

    for (std::size_t r = 0; r < repeats; ++r) {
        const auto start = clock::now();
        switch (method) {
            case Method::SF: {
                volatile auto n = sf_encode(signal, std::get<SFParams>(params)).size();
                (void)n;
                break;
            }
            case Method::LIF: {
                volatile auto n =
                    lif_encode_normalized(prepared, std::get<LIFParams>(params)).size();
                (void)n;
                break;
            }
            case Method::PWM: {
                volatile auto n =
                    pwm_encode_normalized(prepared, std::get<PWMParams>(params)).size();
                (void)n;
                break;
            }
            case Method::BSA: {
                volatile auto n =
                    bsa_encode_normalized(prepared, std::get<BSAParams>(params)).size();
                (void)n;
                break;
            }
        }
        const auto stop = clock::now();
        runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return median(std::move(runs));
}

}  // namespace

BenchmarkReport run_benchmark(const std::vector<Method>& methods,
                              const std::vector<GeneratorSpec>& specs, const BenchConfig& config) {
    return run_benchmark_with_overrides(methods, specs, config, {});
}

BenchmarkReport run_benchmark_with_overrides(
    const std::vector<Method>& methods, const std::vector<GeneratorSpec>& specs,
    const BenchConfig& config, const std::map<std::string, std::string>& space_overrides) {
    if (methods.empty() || specs.empty()) {
        throw InvalidParams("benchmark needs at least one method and one signal");
    }
    if (config.repeats < 1) throw InvalidParams("benchmark repeats must be at least 1");
    if (config.n_trials < 1 || config.bsa_n_trials < 1) {
        throw InvalidParams("benchmark trial counts must be at least 1");
    }

    BenchmarkReport report;
    report.methods = methods;
    report.specs = specs;
    report.config = config;
    report.timestamp = utc_timestamp();

    for (const auto& spec : specs) {
        report.signals.push_back(generate(spec));
    }

    for (std::size_t si = 0; si < specs.size(); ++si) {
        const Signal& signal = report.signals[si];
        for (Method method : methods) {
            BenchCell cell;
            cell.method = method;
            cell.spec = specs[si];
            cell.signal_index = si;
            try {
                const std::size_t trials =
                    method == Method::BSA ? config.bsa_n_trials : config.n_trials;
                SearchSpace space = default_search_space(method, signal);
                apply_space_overrides(space, method, space_overrides, /*method_prefixed=*/true);
                OptimizationResult opt = optimize(method, signal, space, trials, config.seed);

                const MethodParams params = params_from_set(method, opt.best_params);
                auto enc = encode(method, signal, params);
                cell.best_params = std::move(opt.best_params);
                cell.mse = opt.best_mse;
                cell.sparsity_pct = 100.0 * sparsity(enc.spikes);
                cell.reconstruction = decode(method, enc.spikes, params, enc.record, 0.0);
                cell.encode_ms = time_encode_ms(method, signal, params, config.repeats);
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.error = e.what();
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

std::vector<MethodMeans> mean_rows(const BenchmarkReport& report) {
    std::vector<MethodMeans> means;
    for (Method method : report.methods) {
        MethodMeans row;
        row.method = method;
        std::size_t count = 0;
        for (const auto& cell : report.cells) {
            if (cell.method != method || cell.failed) continue;
            row.mean_mse += cell.mse;
            row.mean_sparsity_pct += cell.sparsity_pct;
            ++count;
        }
        if (count > 0) {
            row.mean_mse /= static_cast<double>(count);
            row.mean_sparsity_pct /= static_cast<double>(count);
        }
        means.push_back(row);
    }
    return means;
}

std::size_t failed_cell_count(const BenchmarkReport& report) {
    std::size_t n = 0;
    for (const auto& cell : report.cells) {
        if (cell.failed) ++n;
    }
    return n;
}

std::string first_failure(const BenchmarkReport& report) {
    for (const auto& cell : report.cells) {
        if (cell.failed) {
            return method_name(cell.method) + "/" + kind_name(cell.spec.kind) + ": " + cell.error;
        }
    }
    return {};
}

namespace {

// Fixed feature-index ordering for single-signal runs.
int fixed_feature_index(Method method) {
    switch (method) {
        case Method::LIF: return 1;
        case Method::SF: return 2;
        case Method::PWM: return 3;
        case Method::BSA: return 4;
    }
    return 0;
}

std::string join_params(const ParamSet& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ' ';
        out += key;
        out += '=';
        out += param_value_to_string(value);
    }
    return out;
}

void write_summary(const BenchmarkReport& report, const std::filesystem::path& path,
                   double (*cell_value)(const BenchCell&), bool with_mean) {
    std::string out = "signal";
    for (Method method : report.methods) {
        out += ',';
        out += method_name(method);
    }
    out += '\n';

    const std::size_t n_methods = report.methods.size();
    std::vector<double> sums(n_methods, 0.0);
    std::vector<std::size_t> counts(n_methods, 0);
    for (std::size_t si = 0; si < report.specs.size(); ++si) {
        out += kind_name(report.specs[si].kind);
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            const BenchCell& cell = report.cells[si * n_methods + mi];
            out += ',';
            if (cell.failed) {
                out += "nan";
            } else {
                const double v = cell_value(cell);
                out += csv::format_double(v);
                sums[mi] += v;
                counts[mi] += 1;
            }
        }
        out += '\n';
    }
    if (with_mean) {
        out += "mean";
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            out += ',';
            out += counts[mi] > 0 ? csv::format_double(sums[mi] / static_cast<double>(counts[mi]))
                                  : "nan";
        }
        out += '\n';
    }
    csv::atomic_write_file(path, out);
}

}  // namespace

void write_report(const BenchmarkReport& report, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    for (std::size_t si = 0; si < report.specs.size(); ++si) {
        csv::write_signal_csv(report.signals[si],
                              out_dir / ("signal_" + kind_name(report.specs[si].kind) + ".csv"));
    }

    const bool single_signal = report.specs.size() == 1;
    std::string manifest = "feature,method,signal,mse,sparsity_pct,encode_time_ms,params\n";
    int next_index = 1;
    for (const auto& cell : report.cells) {
        const int index = single_signal ? fixed_feature_index(cell.method) : next_index++;
        manifest += std::to_string(index);
        manifest += ',';
        manifest += method_name(cell.method);
        manifest += ',';
        manifest += kind_name(cell.spec.kind);
        if (cell.failed) {
            manifest += ",nan,nan,nan,failed: " + cell.error + "\n";
            continue;
        }
        manifest += ',';
        manifest += csv::format_double(cell.mse);
        manifest += ',';
        manifest += csv::format_double(cell.sparsity_pct);
        manifest += ',';
        manifest += csv::format_double(cell.encode_ms);
        manifest += ',';
        manifest += join_params(cell.best_params);
        manifest += '\n';
        if (cell.reconstruction) {
            csv::write_feature_csv(
                report.signals[cell.signal_index], *cell.reconstruction,
                out_dir / ("reconstruction_feature_" + std::to_string(index) + ".csv"));
        }
    }
    csv::atomic_write_file(out_dir / "manifest.csv", manifest);

    write_summary(report, out_dir / "reconstruction_error.csv",
                  [](const BenchCell& c) { return c.mse; }, /*with_mean=*/true);
    write_summary(report, out_dir / "sparsity.csv",
                  [](const BenchCell& c) { return c.sparsity_pct; }, /*with_mean=*/true);
    write_summary(report, out_dir / "timing.csv",
                  [](const BenchCell& c) { return c.encode_ms; }, /*with_mean=*/true);

    std::string env = "seed=" + std::to_string(report.config.seed) + "\n";
    env += "n_trials=" + std::to_string(report.config.n_trials) + "\n";
    env += "bsa_n_trials=" + std::to_string(report.config.bsa_n_trials) + "\n";
    env += "repeats=" + std::to_string(report.config.repeats) + "\n";
    env += "timestamp=" + report.timestamp + "\n";
    env += "build=spikecodec 0.1.0\n";
    csv::atomic_write_file(out_dir / "bench_environment.txt", env);
}

}  // namespace spikecodec
