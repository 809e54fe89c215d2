#include "spikecodec.h"

#include <cstring>
#include <map>
#include <string>

#include "spikecodec/bench.hpp"
#include "spikecodec/csv.hpp"

using namespace spikecodec;

// Opaque handle definitions. sc_params doubles as the generic string bag used
// for hyperparameters, spike-train metadata, and search-space overrides.

struct sc_signal {
    Signal value;
};

struct sc_params {
    std::map<std::string, std::string> entries;
};

struct sc_spike_train {
    SpikeTrain train;
    std::map<std::string, std::string> meta;
};

struct sc_opt_result {
    OptimizationResult value;
};

struct sc_bench_report {
    BenchmarkReport value;
    std::string first_failure_cache;
};

namespace {

thread_local std::string g_last_error;

sc_status fail(sc_status code, const char* message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
sc_status guarded(Fn&& fn) {
    try {
        fn();
        return SC_OK;
    } catch (const DegenerateSignal& e) {
        return fail(SC_ERR_DEGENERATE_SIGNAL, e.what());
    } catch (const LengthMismatch& e) {
        return fail(SC_ERR_LENGTH_MISMATCH, e.what());
    } catch (const InvalidSpec& e) {
        return fail(SC_ERR_INVALID_SPEC, e.what());
    } catch (const EmptySpace& e) {
        return fail(SC_ERR_EMPTY_SPACE, e.what());
    } catch (const ParseError& e) {
        return fail(SC_ERR_PARSE, e.what());
    } catch (const IoError& e) {
        return fail(SC_ERR_IO, e.what());
    } catch (const InvalidParams& e) {
        return fail(SC_ERR_INVALID_PARAMS, e.what());
    } catch (const std::exception& e) {
        return fail(SC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SC_ERR_INTERNAL, "unknown error");
    }
}

Method to_method(sc_method m) {
    switch (m) {
        case SC_METHOD_LIF: return Method::LIF;
        case SC_METHOD_SF: return Method::SF;
        case SC_METHOD_PWM: return Method::PWM;
        case SC_METHOD_BSA: return Method::BSA;
    }
    throw InvalidParams("unknown method id");
}

SignalKind to_kind(sc_signal_kind k) {
    switch (k) {
        case SC_SIGNAL_VIBRATION: return SignalKind::Vibration;
        case SC_SIGNAL_TRENDED: return SignalKind::Trended;
        case SC_SIGNAL_RECTANGULAR: return SignalKind::Rectangular;
        case SC_SIGNAL_SINUSOIDAL: return SignalKind::Sinusoidal;
    }
    throw InvalidSpec("unknown signal kind id");
}

GeneratorSpec to_spec(const sc_generator_spec& spec) {
    GeneratorSpec out;
    out.kind = to_kind(spec.kind);
    out.length = spec.length;
    out.seed = spec.seed;
    out.periods = spec.periods;
    out.noise_std = spec.noise_std;
    out.trend_slope = spec.trend_slope;
    return out;
}

std::map<std::string, std::string> method_param_strings(const sc_params* params) {
    return params ? params->entries : std::map<std::string, std::string>{};
}

std::map<std::string, std::string> build_meta(Method method, const MethodParams& params,
                                              const std::optional<NormalizationRecord>& record,
                                              double sf_initial) {
    std::map<std::string, std::string> meta;
    meta["method"] = method_name(method);
    for (const auto& [key, value] : params_to_set(params)) {
        meta[key] = param_value_to_string(value);
    }
    if (record) {
        meta["norm.kind"] = record->kind == NormKind::MinMax ? "minmax" : "zscore";
        meta["norm.offset"] = csv::format_double(record->offset);
        meta["norm.scale"] = csv::format_double(record->scale);
    }
    if (method == Method::SF) {
        meta["initial_value"] = csv::format_double(sf_initial);
    }
    return meta;
}

double parse_meta_double(const std::map<std::string, std::string>& meta, const std::string& key) {
    auto it = meta.find(key);
    if (it == meta.end()) throw InvalidParams("spike train metadata missing key: " + key);
    return std::stod(it->second);
}

}  // namespace

extern "C" {

const char* sc_last_error(void) { return g_last_error.c_str(); }

sc_status sc_signal_create(const double* samples, size_t n, sc_signal** out) {
    if (!samples || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new sc_signal{Signal(std::vector<double>(samples, samples + n))}; });
}

void sc_signal_destroy(sc_signal* sig) { delete sig; }

size_t sc_signal_length(const sc_signal* sig) { return sig ? sig->value.size() : 0; }

const double* sc_signal_data(const sc_signal* sig) {
    return sig ? sig->value.samples().data() : nullptr;
}

sc_status sc_signal_mse(const sc_signal* a, const sc_signal* b, double* out) {
    if (!a || !b || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = mse(a->value, b->value); });
}

void sc_generator_spec_init(sc_generator_spec* spec, sc_signal_kind kind) {
    if (!spec) return;
    const GeneratorSpec defaults;
    spec->kind = kind;
    spec->length = defaults.length;
    spec->seed = defaults.seed;
    spec->periods = defaults.periods;
    spec->noise_std = defaults.noise_std;
    spec->trend_slope = defaults.trend_slope;
}

sc_status sc_generate(const sc_generator_spec* spec, sc_signal** out) {
    if (!spec || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new sc_signal{generate(to_spec(*spec))}; });
}

sc_params* sc_params_create(void) { return new sc_params{}; }

void sc_params_destroy(sc_params* params) { delete params; }

sc_status sc_params_set(sc_params* params, const char* key, const char* value) {
    if (!params || !key || !value) return fail(SC_ERR_INVALID_ARG, "null argument");
    params->entries[key] = value;
    return SC_OK;
}

const char* sc_params_get(const sc_params* params, const char* key) {
    if (!params || !key) return nullptr;
    auto it = params->entries.find(key);
    return it == params->entries.end() ? nullptr : it->second.c_str();
}

size_t sc_params_count(const sc_params* params) { return params ? params->entries.size() : 0; }

sc_status sc_params_at(const sc_params* params, size_t index, const char** key,
                       const char** value) {
    if (!params || !key || !value) return fail(SC_ERR_INVALID_ARG, "null argument");
    if (index >= params->entries.size()) return fail(SC_ERR_INVALID_ARG, "index out of range");
    auto it = params->entries.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *key = it->first.c_str();
    *value = it->second.c_str();
    return SC_OK;
}

sc_status sc_encode(sc_method method, const sc_signal* sig, const sc_params* params,
                    sc_spike_train** out) {
    if (!sig || !params || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const Method m = to_method(method);
        const MethodParams mp = params_from_set(m, param_set_from_strings(m, params->entries));
        EncodeResult enc = encode(m, sig->value, mp);
        // SF decoding replays the encoder's baseline path, which starts at 0.
        auto meta = build_meta(m, mp, enc.record, 0.0);
        *out = new sc_spike_train{std::move(enc.spikes), std::move(meta)};
    });
}

void sc_spike_train_destroy(sc_spike_train* train) { delete train; }

size_t sc_spike_train_length(const sc_spike_train* train) { return train ? train->train.size() : 0; }

const int8_t* sc_spike_train_data(const sc_spike_train* train) {
    return train ? train->train.values().data() : nullptr;
}

double sc_spike_train_sparsity(const sc_spike_train* train) {
    return train ? sparsity(train->train) : 0.0;
}

sc_status sc_spike_train_meta(const sc_spike_train* train, sc_params** out) {
    if (!train || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    *out = new sc_params{train->meta};
    return SC_OK;
}

sc_status sc_spike_train_from_meta(const int8_t* spikes, size_t n, const sc_params* meta,
                                   sc_spike_train** out) {
    if (!spikes || !meta || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        auto it = meta->entries.find("method");
        if (it == meta->entries.end()) {
            throw InvalidParams("spike train metadata missing key: method");
        }
        const Method m = method_from_name(it->second);
        const Polarity polarity = m == Method::BSA ? Polarity::Unipolar : Polarity::Bipolar;
        SpikeTrain train(std::vector<std::int8_t>(spikes, spikes + n), polarity);
        *out = new sc_spike_train{std::move(train), meta->entries};
    });
}

sc_status sc_decode(const sc_spike_train* train, sc_signal** out) {
    if (!train || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto& meta = train->meta;
        auto it = meta.find("method");
        if (it == meta.end()) throw InvalidParams("spike train metadata missing key: method");
        const Method m = method_from_name(it->second);

        std::map<std::string, std::string> raw;
        for (const auto& [key, value] : meta) {
            if (key == "method" || key == "initial_value" || key.starts_with("norm.")) continue;
            raw[key] = value;
        }
        const MethodParams mp = params_from_set(m, param_set_from_strings(m, raw));

        std::optional<NormalizationRecord> record;
        if (meta.contains("norm.kind")) {
            record = NormalizationRecord{
                meta.at("norm.kind") == "zscore" ? NormKind::ZScore : NormKind::MinMax,
                parse_meta_double(meta, "norm.offset"), parse_meta_double(meta, "norm.scale")};
        }
        double sf_initial = 0.0;
        if (meta.contains("initial_value")) {
            sf_initial = parse_meta_double(meta, "initial_value");
        }
        *out = new sc_signal{decode(m, train->train, mp, record, sf_initial)};
    });
}

sc_status sc_grf_encode(double value, int64_t num_bins, double value_min, double value_max,
                        double width_scale, double* out_responses) {
    if (!out_responses) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        GRFParams params{num_bins, value_min, value_max, width_scale};
        const auto responses = grf_encode(value, params);
        std::memcpy(out_responses, responses.data(), responses.size() * sizeof(double));
    });
}

sc_status sc_optimize(sc_method method, const sc_signal* sig, size_t n_trials, uint64_t seed,
                      const sc_params* space_overrides, sc_opt_result** out) {
    if (!sig || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const Method m = to_method(method);
        SearchSpace space = default_search_space(m, sig->value);
        apply_space_overrides(space, m, method_param_strings(space_overrides),
                              /*method_prefixed=*/false);
        *out = new sc_opt_result{optimize(m, sig->value, space, n_trials, seed)};
    });
}

void sc_opt_result_destroy(sc_opt_result* result) { delete result; }

double sc_opt_result_best_mse(const sc_opt_result* result) {
    return result ? result->value.best_mse : 0.0;
}

size_t sc_opt_result_n_trials(const sc_opt_result* result) {
    return result ? result->value.n_trials : 0;
}

sc_status sc_opt_result_best_params(const sc_opt_result* result, sc_params** out) {
    if (!result || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    auto* params = new sc_params{};
    for (const auto& [key, value] : result->value.best_params) {
        params->entries[key] = param_value_to_string(value);
    }
    *out = params;
    return SC_OK;
}

sc_status sc_opt_result_write_trials_csv(const sc_opt_result* result, const char* path) {
    if (!result || !path) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { csv::write_trials_csv(result->value, path); });
}

void sc_bench_config_init(sc_bench_config* config) {
    if (!config) return;
    const BenchConfig defaults;
    config->n_trials = defaults.n_trials;
    config->bsa_n_trials = defaults.bsa_n_trials;
    config->repeats = defaults.repeats;
    config->seed = defaults.seed;
}

sc_status sc_bench_run(const sc_method* methods, size_t n_methods, const sc_generator_spec* specs,
                       size_t n_specs, const sc_bench_config* config,
                       const sc_params* space_overrides, sc_bench_report** out) {
    if (!methods || !specs || !config || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        std::vector<Method> ms;
        ms.reserve(n_methods);
        for (size_t i = 0; i < n_methods; ++i) ms.push_back(to_method(methods[i]));
        std::vector<GeneratorSpec> ss;
        ss.reserve(n_specs);
        for (size_t i = 0; i < n_specs; ++i) ss.push_back(to_spec(specs[i]));
        BenchConfig bc;
        bc.n_trials = config->n_trials;
        bc.bsa_n_trials = config->bsa_n_trials;
        bc.repeats = config->repeats;
        bc.seed = config->seed;
        // Search-space overrides are validated per method inside the runner.
        const auto overrides = method_param_strings(space_overrides);
        *out = new sc_bench_report{run_benchmark_with_overrides(ms, ss, bc, overrides), {}};
    });
}

void sc_bench_report_destroy(sc_bench_report* report) { delete report; }

size_t sc_bench_report_failed_count(const sc_bench_report* report) {
    return report ? failed_cell_count(report->value) : 0;
}

const char* sc_bench_report_first_failure(const sc_bench_report* report) {
    if (!report) return "";
    const_cast<sc_bench_report*>(report)->first_failure_cache = first_failure(report->value);
    return report->first_failure_cache.c_str();
}

sc_status sc_bench_report_write(const sc_bench_report* report, const char* out_dir) {
    if (!report || !out_dir) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { write_report(report->value, out_dir); });
}

sc_status sc_write_signal_csv(const sc_signal* sig, const char* path) {
    if (!sig || !path) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { csv::write_signal_csv(sig->value, path); });
}

sc_status sc_read_signal_csv(const char* path, sc_signal** out) {
    if (!path || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { *out = new sc_signal{csv::read_signal_csv(path)}; });
}

sc_status sc_write_spike_csv(const sc_spike_train* train, const char* path) {
    if (!train || !path) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] { csv::write_spike_csv(train->train, path); });
}

sc_status sc_read_spike_csv(const char* path, const sc_params* meta, sc_spike_train** out) {
    if (!path || !meta || !out) return fail(SC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto values = csv::read_spike_values_csv(path);
        sc_spike_train* train = nullptr;
        const sc_status st = sc_spike_train_from_meta(values.data(), values.size(), meta, &train);
        if (st != SC_OK) throw InvalidParams(g_last_error);
        *out = train;
    });
}

}  // extern "C"
