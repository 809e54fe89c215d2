#include "spikecodec/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "spikecodec/rng.hpp"

namespace spikecodec {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<double> make_raw(const GeneratorSpec& spec) {
    const std::size_t n = spec.length;
    const double nd = static_cast<double>(n);
    const double p = static_cast<double>(spec.periods);
    std::vector<double> raw(n, 0.0);

    std::mt19937_64 gen(spec.seed);
    rng::GaussianSource gauss(gen);

    switch (spec.kind) {
        case SignalKind::Sinusoidal:
            for (std::size_t t = 0; t < n; ++t) {
                raw[t] = std::sin(kTau * p * static_cast<double>(t) / nd);
            }
            break;
        case SignalKind::Rectangular:
            // Cosine phase: the waveform starts mid-level, so p periods
            // sampled over n steps show exactly 2p level transitions.
            for (std::size_t t = 0; t < n; ++t) {
                raw[t] = std::cos(kTau * p * static_cast<double>(t) / nd) >= 0.0 ? 1.0 : -1.0;
            }
            break;
        case SignalKind::Trended: {
            // Drift plus two incommensurate low-frequency tones plus noise.
            const double f1 = 0.5 * p;
            const double f2 = 0.5 * p * std::numbers::sqrt2;
            for (std::size_t t = 0; t < n; ++t) {
                const double x = static_cast<double>(t) / nd;
                raw[t] = spec.trend_slope * x + 0.5 * std::sin(kTau * f1 * x) +
                         0.35 * std::sin(kTau * f2 * x);
                if (spec.noise_std > 0.0) raw[t] += spec.noise_std * gauss.next();
            }
            break;
        }
        case SignalKind::Vibration: {
            // Three mid/high-frequency tones with seeded random phases.
            const double freqs[3] = {4.0 * p, 9.5 * p, 16.25 * p};
            const double amps[3] = {1.0, 0.6, 0.4};
            double phases[3];
            for (double& ph : phases) ph = kTau * rng::uniform01(gen);
            for (std::size_t t = 0; t < n; ++t) {
                const double x = static_cast<double>(t) / nd;
                double v = 0.0;
                for (int k = 0; k < 3; ++k) {
                    v += amps[k] * std::sin(kTau * freqs[k] * x + phases[k]);
                }
                if (spec.noise_std > 0.0) v += spec.noise_std * gauss.next();
                raw[t] = v;
            }
            break;
        }
    }
    return raw;
}

}  // namespace

std::string kind_name(SignalKind kind) {
    switch (kind) {
        case SignalKind::Vibration: return "vibration";
        case SignalKind::Trended: return "trended";
        case SignalKind::Rectangular: return "rectangular";
        case SignalKind::Sinusoidal: return "sinusoidal";
    }
    throw InvalidSpec("unknown signal kind");
}

SignalKind kind_from_name(std::string_view name) {
    if (name == "vibration") return SignalKind::Vibration;
    if (name == "trended") return SignalKind::Trended;
    if (name == "rectangular") return SignalKind::Rectangular;
    if (name == "sinusoidal") return SignalKind::Sinusoidal;
    throw InvalidSpec("unknown signal kind: " + std::string(name));
}

Signal generate(const GeneratorSpec& spec) {
    if (spec.length < 16) {
        throw InvalidSpec("generator length must be at least 16");
    }
    if (spec.periods < 1) {
        throw InvalidSpec("generator periods must be at least 1");
    }
    if (!(spec.noise_std >= 0.0) || !std::isfinite(spec.noise_std)) {
        throw InvalidSpec("noise_std must be finite and non-negative");
    }
    if (!std::isfinite(spec.trend_slope)) {
        throw InvalidSpec("trend_slope must be finite");
    }

    Signal raw(make_raw(spec));
    try {
        return zscore_normalize(raw).first;
    } catch (const DegenerateSignal&) {
        throw InvalidSpec("generated waveform has zero variance");
    }
}

}  // namespace spikecodec
