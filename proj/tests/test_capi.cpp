#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "spikecodec.h"
#include "test_util.hpp"

namespace {

template <typename T, void (*Destroy)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& other) noexcept : p(other.p) { other.p = nullptr; }
    Handle& operator=(Handle&& other) noexcept {
        if (this != &other) {
            if (p) Destroy(p);
            p = other.p;
            other.p = nullptr;
        }
        return *this;
    }
    ~Handle() {
        if (p) Destroy(p);
    }
};

using SignalPtr = Handle<sc_signal, sc_signal_destroy>;
using TrainPtr = Handle<sc_spike_train, sc_spike_train_destroy>;
using ParamsPtr = Handle<sc_params, sc_params_destroy>;

ParamsPtr make_params(std::initializer_list<std::pair<const char*, const char*>> entries) {
    ParamsPtr params;
    params.p = sc_params_create();
    for (const auto& [key, value] : entries) {
        REQUIRE(sc_params_set(params.p, key, value) == SC_OK);
    }
    return params;
}

}  // namespace

TEST_CASE("signal lifecycle and error reporting") {
    const double samples[] = {0.5, 1.5, -2.0};
    SignalPtr sig;
    REQUIRE(sc_signal_create(samples, 3, &sig.p) == SC_OK);
    CHECK(sc_signal_length(sig.p) == 3);
    CHECK(std::memcmp(sc_signal_data(sig.p), samples, sizeof samples) == 0);

    sc_signal* bad = nullptr;
    CHECK(sc_signal_create(samples, 0, &bad) == SC_ERR_INVALID_PARAMS);
    CHECK(bad == nullptr);
    CHECK(std::string(sc_last_error()).size() > 0);

    const double nan_sample = std::nan("");
    CHECK(sc_signal_create(&nan_sample, 1, &bad) == SC_ERR_INVALID_PARAMS);

    SignalPtr other;
    const double two[] = {1.0, 2.0};
    REQUIRE(sc_signal_create(two, 2, &other.p) == SC_OK);
    double err = 0.0;
    CHECK(sc_signal_mse(sig.p, other.p, &err) == SC_ERR_LENGTH_MISMATCH);
    CHECK(sc_signal_mse(sig.p, sig.p, &err) == SC_OK);
    CHECK(err == 0.0);
}

TEST_CASE("generation matches defaults and rejects bad specs") {
    sc_generator_spec spec;
    sc_generator_spec_init(&spec, SC_SIGNAL_SINUSOIDAL);
    CHECK(spec.length == 16384);
    CHECK(spec.periods == 8);

    spec.length = 128;
    SignalPtr sig;
    REQUIRE(sc_generate(&spec, &sig.p) == SC_OK);
    CHECK(sc_signal_length(sig.p) == 128);

    spec.length = 4;
    sc_signal* bad = nullptr;
    CHECK(sc_generate(&spec, &bad) == SC_ERR_INVALID_SPEC);
}

TEST_CASE("params bag CRUD") {
    ParamsPtr params = make_params({{"threshold", "0.15"}});
    CHECK(sc_params_count(params.p) == 1);
    CHECK(std::string(sc_params_get(params.p, "threshold")) == "0.15");
    CHECK(sc_params_get(params.p, "missing") == nullptr);

    REQUIRE(sc_params_set(params.p, "threshold", "0.2") == SC_OK);
    CHECK(sc_params_count(params.p) == 1);
    const char* key = nullptr;
    const char* value = nullptr;
    REQUIRE(sc_params_at(params.p, 0, &key, &value) == SC_OK);
    CHECK(std::string(key) == "threshold");
    CHECK(std::string(value) == "0.2");
    CHECK(sc_params_at(params.p, 5, &key, &value) == SC_ERR_INVALID_ARG);
}

TEST_CASE("encode: sf hand trace through the C surface") {
    const double samples[] = {0.1, 0.3, 0.2, 0.4, 0.8};
    SignalPtr sig;
    REQUIRE(sc_signal_create(samples, 5, &sig.p) == SC_OK);

    ParamsPtr params = make_params({{"threshold", "0.15"}});
    TrainPtr train;
    REQUIRE(sc_encode(SC_METHOD_SF, sig.p, params.p, &train.p) == SC_OK);
    REQUIRE(sc_spike_train_length(train.p) == 5);
    const int8_t expected[] = {0, 1, 0, 1, 1};
    CHECK(std::memcmp(sc_spike_train_data(train.p), expected, sizeof expected) == 0);
    CHECK(sc_spike_train_sparsity(train.p) == doctest::Approx(0.6));

    ParamsPtr bad = make_params({{"threshold", "-1"}});
    sc_spike_train* none = nullptr;
    CHECK(sc_encode(SC_METHOD_SF, sig.p, bad.p, &none) == SC_ERR_INVALID_PARAMS);

    ParamsPtr unknown = make_params({{"threshold", "0.15"}, {"wat", "1"}});
    CHECK(sc_encode(SC_METHOD_SF, sig.p, unknown.p, &none) == SC_ERR_INVALID_PARAMS);
}

TEST_CASE("metadata round trip: decode equals decode-after-rehydration") {
    sc_generator_spec spec;
    sc_generator_spec_init(&spec, SC_SIGNAL_TRENDED);
    spec.length = 256;
    spec.seed = 11;
    SignalPtr sig;
    REQUIRE(sc_generate(&spec, &sig.p) == SC_OK);

    std::vector<std::pair<sc_method, ParamsPtr>> cases;
    cases.emplace_back(SC_METHOD_SF, make_params({{"threshold", "0.2"}}));
    cases.emplace_back(SC_METHOD_LIF,
                       make_params({{"threshold", "0.3"}, {"membrane_constant", "0.9"}}));
    cases.emplace_back(SC_METHOD_PWM, make_params({{"frequency", "16"}, {"downspike", "true"}}));
    cases.emplace_back(SC_METHOD_BSA, make_params({{"filter_order", "8"}, {"filter_cutoff", "0.1"},
                                                   {"threshold", "0.1"}}));
    for (const auto& [method, params] : cases) {
        TrainPtr train;
        REQUIRE(sc_encode(method, sig.p, params.p, &train.p) == SC_OK);

        SignalPtr direct;
        REQUIRE(sc_decode(train.p, &direct.p) == SC_OK);
        CHECK(sc_signal_length(direct.p) == 256);

        ParamsPtr meta;
        REQUIRE(sc_spike_train_meta(train.p, &meta.p) == SC_OK);
        CHECK(sc_params_get(meta.p, "method") != nullptr);

        TrainPtr rebuilt;
        REQUIRE(sc_spike_train_from_meta(sc_spike_train_data(train.p),
                                         sc_spike_train_length(train.p), meta.p,
                                         &rebuilt.p) == SC_OK);
        SignalPtr again;
        REQUIRE(sc_decode(rebuilt.p, &again.p) == SC_OK);
        double gap = -1.0;
        REQUIRE(sc_signal_mse(direct.p, again.p, &gap) == SC_OK);
        CHECK(gap == 0.0);
    }
}

TEST_CASE("grf encode through the C surface") {
    double responses[5] = {0};
    REQUIRE(sc_grf_encode(0.25, 5, 0.0, 1.0, 1.0, responses) == SC_OK);
    CHECK(responses[1] == doctest::Approx(1.0));
    CHECK(sc_grf_encode(0.25, 1, 0.0, 1.0, 1.0, responses) == SC_ERR_INVALID_PARAMS);
}

TEST_CASE("optimize through the C surface is deterministic and respects overrides") {
    sc_generator_spec spec;
    sc_generator_spec_init(&spec, SC_SIGNAL_SINUSOIDAL);
    spec.length = 256;
    spec.periods = 4;
    SignalPtr sig;
    REQUIRE(sc_generate(&spec, &sig.p) == SC_OK);

    sc_opt_result* a = nullptr;
    sc_opt_result* b = nullptr;
    REQUIRE(sc_optimize(SC_METHOD_SF, sig.p, 30, 7, nullptr, &a) == SC_OK);
    REQUIRE(sc_optimize(SC_METHOD_SF, sig.p, 30, 7, nullptr, &b) == SC_OK);
    CHECK(sc_opt_result_n_trials(a) == 30);
    CHECK(sc_opt_result_best_mse(a) == sc_opt_result_best_mse(b));

    sc_params* best = nullptr;
    REQUIRE(sc_opt_result_best_params(a, &best) == SC_OK);
    CHECK(sc_params_get(best, "threshold") != nullptr);
    sc_params_destroy(best);
    sc_opt_result_destroy(a);
    sc_opt_result_destroy(b);

    // Pinning the threshold range to a narrow band constrains every sample.
    ParamsPtr overrides = make_params({{"threshold.low", "0.5"}, {"threshold.high", "0.6"}});
    sc_opt_result* pinned = nullptr;
    REQUIRE(sc_optimize(SC_METHOD_SF, sig.p, 10, 7, overrides.p, &pinned) == SC_OK);
    sc_params* pinned_best = nullptr;
    REQUIRE(sc_opt_result_best_params(pinned, &pinned_best) == SC_OK);
    const double threshold = std::stod(sc_params_get(pinned_best, "threshold"));
    CHECK(threshold >= 0.5);
    CHECK(threshold <= 0.6);
    sc_params_destroy(pinned_best);
    sc_opt_result_destroy(pinned);

    ParamsPtr bogus = make_params({{"nope.low", "1"}});
    sc_opt_result* none = nullptr;
    CHECK(sc_optimize(SC_METHOD_SF, sig.p, 5, 7, bogus.p, &none) == SC_ERR_INVALID_PARAMS);
}

TEST_CASE("bench and CSV I/O through the C surface") {
    test_util::TempDir dir("capi_bench");

    sc_generator_spec spec;
    sc_generator_spec_init(&spec, SC_SIGNAL_SINUSOIDAL);
    spec.length = 128;
    spec.periods = 4;
    const sc_method methods[] = {SC_METHOD_SF, SC_METHOD_PWM};

    sc_bench_config config;
    sc_bench_config_init(&config);
    CHECK(config.n_trials == 500);
    CHECK(config.bsa_n_trials == 1000);
    config.n_trials = 10;
    config.bsa_n_trials = 10;
    config.repeats = 1;

    sc_bench_report* report = nullptr;
    REQUIRE(sc_bench_run(methods, 2, &spec, 1, &config, nullptr, &report) == SC_OK);
    CHECK(sc_bench_report_failed_count(report) == 0);
    CHECK(std::string(sc_bench_report_first_failure(report)).empty());
    REQUIRE(sc_bench_report_write(report, dir.path().string().c_str()) == SC_OK);
    sc_bench_report_destroy(report);
    CHECK(std::filesystem::exists(dir.path() / "reconstruction_error.csv"));

    // Signal CSV round trip.
    SignalPtr sig;
    REQUIRE(sc_generate(&spec, &sig.p) == SC_OK);
    const auto csv_path = (dir.path() / "sig.csv").string();
    REQUIRE(sc_write_signal_csv(sig.p, csv_path.c_str()) == SC_OK);
    SignalPtr back;
    REQUIRE(sc_read_signal_csv(csv_path.c_str(), &back.p) == SC_OK);
    double gap = -1.0;
    REQUIRE(sc_signal_mse(sig.p, back.p, &gap) == SC_OK);
    CHECK(gap == 0.0);

    CHECK(sc_read_signal_csv((dir.path() / "missing.csv").string().c_str(), &back.p) != SC_OK);

    // Spike CSV round trip with metadata.
    ParamsPtr params = make_params({{"threshold", "0.2"}});
    TrainPtr train;
    REQUIRE(sc_encode(SC_METHOD_SF, sig.p, params.p, &train.p) == SC_OK);
    const auto spikes_path = (dir.path() / "spikes.csv").string();
    REQUIRE(sc_write_spike_csv(train.p, spikes_path.c_str()) == SC_OK);

    ParamsPtr meta;
    REQUIRE(sc_spike_train_meta(train.p, &meta.p) == SC_OK);
    TrainPtr reread;
    REQUIRE(sc_read_spike_csv(spikes_path.c_str(), meta.p, &reread.p) == SC_OK);
    CHECK(sc_spike_train_length(reread.p) == sc_spike_train_length(train.p));
    SignalPtr recon;
    REQUIRE(sc_decode(reread.p, &recon.p) == SC_OK);
    CHECK(sc_signal_length(recon.p) == 128);
}
