/*
 * spikecodec C API: spike encoding/decoding toolkit.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return SC_OK on success; on failure they return an error code and
 * sc_last_error() yields a thread-local message describing the failure.
 * Out-parameters are only written on success.
 */
#ifndef SPIKECODEC_H
#define SPIKECODEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_INVALID_ARG = 1,
    SC_ERR_DEGENERATE_SIGNAL = 2,
    SC_ERR_LENGTH_MISMATCH = 3,
    SC_ERR_INVALID_PARAMS = 4,
    SC_ERR_INVALID_SPEC = 5,
    SC_ERR_EMPTY_SPACE = 6,
    SC_ERR_PARSE = 7,
    SC_ERR_IO = 8,
    SC_ERR_INTERNAL = 9
} sc_status;

typedef enum sc_method {
    SC_METHOD_LIF = 0,
    SC_METHOD_SF = 1,
    SC_METHOD_PWM = 2,
    SC_METHOD_BSA = 3
} sc_method;

typedef enum sc_signal_kind {
    SC_SIGNAL_VIBRATION = 0,
    SC_SIGNAL_TRENDED = 1,
    SC_SIGNAL_RECTANGULAR = 2,
    SC_SIGNAL_SINUSOIDAL = 3
} sc_signal_kind;

typedef struct sc_signal sc_signal;
typedef struct sc_spike_train sc_spike_train;
typedef struct sc_params sc_params;
typedef struct sc_opt_result sc_opt_result;
typedef struct sc_bench_report sc_bench_report;

/* Thread-local message for the most recent failing call on this thread. */
SC_API const char *sc_last_error(void);

/* ---- signals ---- */

SC_API sc_status sc_signal_create(const double *samples, size_t n, sc_signal **out);
SC_API void sc_signal_destroy(sc_signal *sig);
SC_API size_t sc_signal_length(const sc_signal *sig);
/* Pointer stays valid until the signal is destroyed. */
SC_API const double *sc_signal_data(const sc_signal *sig);
SC_API sc_status sc_signal_mse(const sc_signal *a, const sc_signal *b, double *out);

typedef struct sc_generator_spec {
    sc_signal_kind kind;
    size_t length;
    uint64_t seed;
    size_t periods;
    double noise_std;
    double trend_slope;
} sc_generator_spec;

SC_API void sc_generator_spec_init(sc_generator_spec *spec, sc_signal_kind kind);
SC_API sc_status sc_generate(const sc_generator_spec *spec, sc_signal **out);

/* ---- string key/value bags (parameters, metadata, config overrides) ---- */

SC_API sc_params *sc_params_create(void);
SC_API void sc_params_destroy(sc_params *params);
SC_API sc_status sc_params_set(sc_params *params, const char *key, const char *value);
/* NULL when the key is absent; pointer valid until the bag changes. */
SC_API const char *sc_params_get(const sc_params *params, const char *key);
SC_API size_t sc_params_count(const sc_params *params);
SC_API sc_status sc_params_at(const sc_params *params, size_t index, const char **key,
                              const char **value);

/* ---- encode / decode ---- */

/*
 * Encodes a signal. `params` holds the method's hyperparameters as strings
 * (e.g. "threshold" = "0.15"). The returned train carries everything its
 * decoder needs (method, params, normalization record, SF initial value);
 * sc_spike_train_meta exposes that bag for persistence.
 */
SC_API sc_status sc_encode(sc_method method, const sc_signal *sig, const sc_params *params,
                           sc_spike_train **out);
SC_API void sc_spike_train_destroy(sc_spike_train *train);
SC_API size_t sc_spike_train_length(const sc_spike_train *train);
SC_API const int8_t *sc_spike_train_data(const sc_spike_train *train);
SC_API double sc_spike_train_sparsity(const sc_spike_train *train);
SC_API sc_status sc_spike_train_meta(const sc_spike_train *train, sc_params **out);

/* Rebuilds a decodable train from raw spike values plus a metadata bag as
 * produced by sc_spike_train_meta. */
SC_API sc_status sc_spike_train_from_meta(const int8_t *spikes, size_t n, const sc_params *meta,
                                          sc_spike_train **out);
SC_API sc_status sc_decode(const sc_spike_train *train, sc_signal **out);

/* Gaussian receptive field population code (encode-only). Writes num_bins
 * responses into `out_responses`. */
SC_API sc_status sc_grf_encode(double value, int64_t num_bins, double value_min, double value_max,
                               double width_scale, double *out_responses);

/* ---- optimization ---- */

/*
 * Seeded random search minimizing reconstruction MSE. `space_overrides` may
 * be NULL; otherwise keys like "threshold.low", "threshold.high",
 * "frequency.log" (values "true"/"false") or "downspike" ("true"/"false"/
 * "both") reshape the method's default search space.
 */
SC_API sc_status sc_optimize(sc_method method, const sc_signal *sig, size_t n_trials,
                             uint64_t seed, const sc_params *space_overrides,
                             sc_opt_result **out);
SC_API void sc_opt_result_destroy(sc_opt_result *result);
SC_API double sc_opt_result_best_mse(const sc_opt_result *result);
SC_API size_t sc_opt_result_n_trials(const sc_opt_result *result);
SC_API sc_status sc_opt_result_best_params(const sc_opt_result *result, sc_params **out);
SC_API sc_status sc_opt_result_write_trials_csv(const sc_opt_result *result, const char *path);

/* ---- benchmark ---- */

typedef struct sc_bench_config {
    size_t n_trials;
    size_t bsa_n_trials;
    size_t repeats;
    uint64_t seed;
} sc_bench_config;

SC_API void sc_bench_config_init(sc_bench_config *config);

/* Runs every (method, signal) cell; failed cells are recorded, not fatal.
 * `space_overrides` may be NULL; keys are method-prefixed
 * (e.g. "bsa.threshold.low"). */
SC_API sc_status sc_bench_run(const sc_method *methods, size_t n_methods,
                              const sc_generator_spec *specs, size_t n_specs,
                              const sc_bench_config *config, const sc_params *space_overrides,
                              sc_bench_report **out);
SC_API void sc_bench_report_destroy(sc_bench_report *report);
SC_API size_t sc_bench_report_failed_count(const sc_bench_report *report);
/* Empty string when every cell succeeded. */
SC_API const char *sc_bench_report_first_failure(const sc_bench_report *report);
/* Writes signal_*.csv, reconstruction_feature_*.csv, manifest.csv and the
 * summary CSVs into out_dir. */
SC_API sc_status sc_bench_report_write(const sc_bench_report *report, const char *out_dir);

/* ---- CSV I/O ---- */

SC_API sc_status sc_write_signal_csv(const sc_signal *sig, const char *path);
SC_API sc_status sc_read_signal_csv(const char *path, sc_signal **out);
SC_API sc_status sc_write_spike_csv(const sc_spike_train *train, const char *path);
SC_API sc_status sc_read_spike_csv(const char *path, const sc_params *meta, sc_spike_train **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPIKECODEC_H */
