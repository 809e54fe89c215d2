#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "spikecodec/bench.hpp"
#include "spikecodec/csv.hpp"
#include "test_util.hpp"

using namespace spikecodec;

namespace {

GeneratorSpec small_spec(SignalKind kind, std::size_t length = 256) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.length = length;
    spec.periods = 4;
    spec.seed = 1;
    return spec;
}

BenchConfig small_config() {
    BenchConfig config;
    config.n_trials = 15;
    config.bsa_n_trials = 15;
    config.repeats = 1;
    config.seed = 3;
    return config;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += (c == '\n');
    return n;
}

}  // namespace

TEST_CASE("single cell: report mse equals the optimizer's best") {
    const auto report = run_benchmark({Method::SF}, {small_spec(SignalKind::Sinusoidal)},
                                      small_config());
    REQUIRE(report.cells.size() == 1);
    const BenchCell& cell = report.cells.front();
    REQUIRE_FALSE(cell.failed);

    const Signal& signal = report.signals.front();
    SearchSpace space = default_search_space(Method::SF, signal);
    const auto opt = optimize(Method::SF, signal, space, 15, 3);
    CHECK(cell.mse == opt.best_mse);
    CHECK(cell.best_params == opt.best_params);
    CHECK(cell.sparsity_pct >= 0.0);
    CHECK(cell.sparsity_pct <= 100.0);
    CHECK(cell.encode_ms >= 0.0);
    REQUIRE(cell.reconstruction.has_value());
    CHECK(cell.reconstruction->size() == signal.size());
}

TEST_CASE("full grid shape and mean rows") {
    const std::vector<GeneratorSpec> specs{
        small_spec(SignalKind::Vibration), small_spec(SignalKind::Trended),
        small_spec(SignalKind::Rectangular), small_spec(SignalKind::Sinusoidal)};
    const std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
    const auto report = run_benchmark(methods, specs, small_config());
    REQUIRE(report.cells.size() == 16);
    CHECK(failed_cell_count(report) == 0);
    CHECK(first_failure(report).empty());

    const auto means = mean_rows(report);
    REQUIRE(means.size() == 4);
    for (std::size_t mi = 0; mi < 4; ++mi) {
        double sum = 0.0;
        for (std::size_t si = 0; si < 4; ++si) {
            sum += report.cells[si * 4 + mi].mse;
        }
        CHECK(means[mi].method == methods[mi]);
        CHECK(means[mi].mean_mse == doctest::Approx(sum / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("reproducibility of cell results across runs") {
    const std::vector<GeneratorSpec> specs{small_spec(SignalKind::Trended)};
    const std::vector<Method> methods{Method::SF, Method::PWM};
    const auto a = run_benchmark(methods, specs, small_config());
    const auto b = run_benchmark(methods, specs, small_config());
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].mse == b.cells[i].mse);
        CHECK(a.cells[i].sparsity_pct == b.cells[i].sparsity_pct);
        CHECK(a.cells[i].best_params == b.cells[i].best_params);
    }
}

TEST_CASE("a failing cell is isolated, not fatal") {
    // Pin the BSA filter far beyond the signal length; every BSA trial throws,
    // surfacing as a failed cell while the SF cell still completes.
    const std::vector<GeneratorSpec> specs{small_spec(SignalKind::Sinusoidal, 64)};
    const auto report = run_benchmark_with_overrides(
        {Method::SF, Method::BSA}, specs, small_config(),
        {{"bsa.filter_order.low", "200"}, {"bsa.filter_order.high", "400"}});
    REQUIRE(report.cells.size() == 2);
    CHECK_FALSE(report.cells[0].failed);
    CHECK(report.cells[1].failed);
    CHECK_FALSE(report.cells[1].error.empty());
    CHECK(failed_cell_count(report) == 1);
    CHECK(first_failure(report).find("bsa/sinusoidal") == 0);

    const auto means = mean_rows(report);
    CHECK(means[0].mean_mse == report.cells[0].mse);
    CHECK(means[1].mean_mse == 0.0);  // no surviving BSA cells
}

TEST_CASE("write_report emits every contracted file with the right shape") {
    test_util::TempDir dir("bench_report");
    const std::vector<GeneratorSpec> specs{small_spec(SignalKind::Sinusoidal, 128),
                                           small_spec(SignalKind::Rectangular, 128)};
    const std::vector<Method> methods{Method::LIF, Method::SF};
    const auto report = run_benchmark(methods, specs, small_config());
    write_report(report, dir.path());

    for (const char* name : {"signal_sinusoidal.csv", "signal_rectangular.csv", "manifest.csv",
                             "reconstruction_error.csv", "sparsity.csv", "timing.csv",
                             "bench_environment.txt"}) {
        CHECK(std::filesystem::exists(dir.path() / name));
    }

    // Multi-signal run: sequential feature indices 1..4, mapped by the manifest.
    for (int k = 1; k <= 4; ++k) {
        const auto path = dir.path() / ("reconstruction_feature_" + std::to_string(k) + ".csv");
        REQUIRE(std::filesystem::exists(path));
        const std::string text = read_file(path);
        CHECK(text.rfind("step,original,reconstructed,mse\n", 0) == 0);
        CHECK(line_count(text) == 129);
    }

    const std::string manifest = read_file(dir.path() / "manifest.csv");
    CHECK(manifest.rfind("feature,method,signal,mse,sparsity_pct,encode_time_ms,params\n", 0) == 0);
    CHECK(line_count(manifest) == 5);

    const std::string errors = read_file(dir.path() / "reconstruction_error.csv");
    CHECK(errors.rfind("signal,lif,sf\n", 0) == 0);
    CHECK(line_count(errors) == 4);  // header + 2 signals + mean
    CHECK(errors.find("\nmean,") != std::string::npos);
}

TEST_CASE("single-signal run uses the fixed feature indices") {
    test_util::TempDir dir("bench_fixed");
    const std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
    const auto report =
        run_benchmark(methods, {small_spec(SignalKind::Sinusoidal, 128)}, small_config());
    write_report(report, dir.path());

    const std::string manifest = read_file(dir.path() / "manifest.csv");
    CHECK(manifest.find("1,lif,") != std::string::npos);
    CHECK(manifest.find("2,sf,") != std::string::npos);
    CHECK(manifest.find("3,pwm,") != std::string::npos);
    CHECK(manifest.find("4,bsa,") != std::string::npos);
    for (int k = 1; k <= 4; ++k) {
        CHECK(std::filesystem::exists(dir.path() /
                                      ("reconstruction_feature_" + std::to_string(k) + ".csv")));
    }
}

TEST_CASE("feature file mse column ends at the summary value") {
    test_util::TempDir dir("bench_mse");
    const auto report =
        run_benchmark({Method::SF}, {small_spec(SignalKind::Sinusoidal, 64)}, small_config());
    write_report(report, dir.path());

    const std::string text = read_file(dir.path() / "reconstruction_feature_2.csv");
    const std::size_t last_line_start = text.rfind('\n', text.size() - 2) + 1;
    const std::string last_line = text.substr(last_line_start);
    const std::size_t last_comma = last_line.rfind(',');
    const double final_mse = std::stod(last_line.substr(last_comma + 1));

    const Signal& signal = report.signals.front();
    const BenchCell& cell = report.cells.front();
    CHECK(final_mse == doctest::Approx(mse(signal, *cell.reconstruction)).epsilon(1e-9));
}

TEST_CASE("precondition validation") {
    CHECK_THROWS_AS(run_benchmark({}, {small_spec(SignalKind::Sinusoidal)}, small_config()),
                    InvalidParams);
    CHECK_THROWS_AS(run_benchmark({Method::SF}, {}, small_config()), InvalidParams);
    BenchConfig bad = small_config();
    bad.repeats = 0;
    CHECK_THROWS_AS(run_benchmark({Method::SF}, {small_spec(SignalKind::Sinusoidal)}, bad),
                    InvalidParams);
}
