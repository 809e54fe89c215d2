#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "spikecodec/generators.hpp"

using namespace spikecodec;

namespace {

// Direct DFT magnitude at one bin; deliberately independent of any FFT code.
double dft_magnitude(const Signal& signal, std::size_t bin) {
    const std::size_t n = signal.size();
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(bin) *
                             static_cast<double>(t) / static_cast<double>(n);
        re += signal[t] * std::cos(phase);
        im -= signal[t] * std::sin(phase);
    }
    return std::sqrt(re * re + im * im);
}

double lag1_autocorrelation(const Signal& signal) {
    double acc = 0.0, norm = 0.0;
    for (std::size_t t = 0; t + 1 < signal.size(); ++t) {
        acc += signal[t] * signal[t + 1];
    }
    for (double s : signal.samples()) norm += s * s;
    return acc / norm;
}

void check_znormalized(const Signal& signal) {
    double mean = 0.0;
    for (double s : signal.samples()) mean += s;
    mean /= static_cast<double>(signal.size());
    double var = 0.0;
    for (double s : signal.samples()) var += (s - mean) * (s - mean);
    var /= static_cast<double>(signal.size());
    CHECK(std::abs(mean) < 1e-9);
    CHECK(std::abs(var - 1.0) < 1e-9);
}

}  // namespace

TEST_CASE("spec validation") {
    GeneratorSpec spec;
    spec.length = 8;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec.length = 64;
    spec.periods = 0;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec.periods = 2;
    spec.noise_std = -0.5;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
}

TEST_CASE("kind names round trip") {
    for (SignalKind kind : {SignalKind::Vibration, SignalKind::Trended, SignalKind::Rectangular,
                            SignalKind::Sinusoidal}) {
        CHECK(kind_from_name(kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(kind_from_name("triangle"), InvalidSpec);
}

TEST_CASE("sinusoidal: z-normalized pure tone with spectral peak at the period count") {
    GeneratorSpec spec;
    spec.kind = SignalKind::Sinusoidal;
    spec.length = 16384;
    spec.periods = 8;
    const Signal signal = generate(spec);
    REQUIRE(signal.size() == 16384);
    check_znormalized(signal);

    const double peak = dft_magnitude(signal, 8);
    for (std::size_t bin : {1u, 2u, 4u, 7u, 9u, 16u, 100u}) {
        CHECK(dft_magnitude(signal, bin) < 0.01 * peak);
    }
}

TEST_CASE("rectangular: two levels, 2*periods transitions") {
    GeneratorSpec spec;
    spec.kind = SignalKind::Rectangular;
    spec.length = 1000;
    spec.periods = 5;
    const Signal signal = generate(spec);
    check_znormalized(signal);

    std::set<double> levels(signal.samples().begin(), signal.samples().end());
    CHECK(levels.size() == 2);

    std::size_t transitions = 0;
    for (std::size_t t = 1; t < signal.size(); ++t) {
        if (signal[t] != signal[t - 1]) ++transitions;
    }
    CHECK(transitions == 10);
}

TEST_CASE("determinism: identical spec yields bit-identical output") {
    for (SignalKind kind : {SignalKind::Vibration, SignalKind::Trended, SignalKind::Rectangular,
                            SignalKind::Sinusoidal}) {
        GeneratorSpec spec;
        spec.kind = kind;
        spec.length = 512;
        spec.seed = 99;
        const Signal a = generate(spec);
        const Signal b = generate(spec);
        CHECK(a.samples() == b.samples());

        spec.seed = 100;
        if (kind == SignalKind::Vibration || kind == SignalKind::Trended) {
            CHECK(generate(spec).samples() != a.samples());
        }
    }
}

TEST_CASE("every kind satisfies the z-normalization contract") {
    for (SignalKind kind : {SignalKind::Vibration, SignalKind::Trended, SignalKind::Rectangular,
                            SignalKind::Sinusoidal}) {
        GeneratorSpec spec;
        spec.kind = kind;
        spec.length = 2048;
        spec.seed = 7;
        check_znormalized(generate(spec));
    }
}

TEST_CASE("trended: positive least-squares slope when trend_slope > 0") {
    std::uint64_t seeds[] = {0, 1, 2, 3, 17, 42};
    for (std::uint64_t seed : seeds) {
        GeneratorSpec spec;
        spec.kind = SignalKind::Trended;
        spec.length = 4096;
        spec.seed = seed;
        spec.trend_slope = 0.5 + static_cast<double>(seed % 5);
        const Signal signal = generate(spec);

        // Direct least-squares regression of amplitude on step index.
        const double n = static_cast<double>(signal.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t t = 0; t < signal.size(); ++t) {
            const double x = static_cast<double>(t);
            sx += x;
            sy += signal[t];
            sxx += x * x;
            sxy += x * signal[t];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(slope > 0.0);
    }
}

TEST_CASE("vibration is less regular than sinusoidal (lag-1 autocorrelation)") {
    GeneratorSpec vib;
    vib.kind = SignalKind::Vibration;
    vib.length = 8192;
    vib.seed = 3;
    GeneratorSpec sine = vib;
    sine.kind = SignalKind::Sinusoidal;
    CHECK(lag1_autocorrelation(generate(vib)) < lag1_autocorrelation(generate(sine)));
}
