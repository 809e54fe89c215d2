#include "spikecodec/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spikecodec {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

void SFParams::validate() const {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InvalidParams("SF threshold must be positive and finite");
    }
}

void LIFParams::validate() const {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InvalidParams("LIF threshold must be positive and finite");
    }
    if (!(membrane_constant > 0.0) || !(membrane_constant <= 1.0)) {
        throw InvalidParams("LIF membrane_constant must lie in (0, 1]");
    }
}

void PWMParams::validate() const {
    if (frequency < 1) {
        throw InvalidParams("PWM frequency must be at least 1");
    }
}

void BSAParams::validate() const {
    if (filter_order < 0) {
        throw InvalidParams("BSA filter_order must be non-negative");
    }
    if (!(filter_cutoff > 0.0) || !(filter_cutoff < 0.5)) {
        throw InvalidParams("BSA filter_cutoff must lie in (0, 0.5)");
    }
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InvalidParams("BSA threshold must be positive and finite");
    }
}

void GRFParams::validate() const {
    if (num_bins < 2) {
        throw InvalidParams("GRF num_bins must be at least 2");
    }
    if (!(value_max > value_min)) {
        throw InvalidParams("GRF value_max must exceed value_min");
    }
    if (!(width_scale > 0.0) || !std::isfinite(width_scale)) {
        throw InvalidParams("GRF width_scale must be positive and finite");
    }
}

SpikeTrain sf_encode(const Signal& signal, const SFParams& params) {
    params.validate();
    const std::size_t n = signal.size();
    std::vector<std::int8_t> spikes(n, 0);
    double base = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        if (signal[t] > base + params.threshold) {
            spikes[t] = 1;
            base += params.threshold;
        } else if (signal[t] < base - params.threshold) {
            spikes[t] = -1;
            base -= params.threshold;
        }
    }
    return SpikeTrain(std::move(spikes), Polarity::Bipolar);
}

Signal sf_decode(const SpikeTrain& spikes, const SFParams& params, double initial_value) {
    params.validate();
    std::vector<double> out;
    out.reserve(spikes.size());
    double level = initial_value;
    for (std::int8_t s : spikes.values()) {
        level += params.threshold * static_cast<double>(s);
        out.push_back(level);
    }
    return Signal(std::move(out));
}

SpikeTrain lif_encode_normalized(const std::vector<double>& centered, const LIFParams& params,
                                 std::vector<double>* voltage_trace) {
    params.validate();
    const std::size_t n = centered.size();
    std::vector<std::int8_t> spikes(n, 0);
    if (voltage_trace) {
        voltage_trace->clear();
        voltage_trace->reserve(n);
    }
    double voltage = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        voltage += centered[t];
        if (voltage > params.threshold) {
            spikes[t] = 1;
            voltage = 0.0;
        } else if (voltage < -params.threshold) {
            spikes[t] = -1;
            voltage = 0.0;
        }
        voltage *= params.membrane_constant;
        if (voltage_trace) voltage_trace->push_back(voltage);
    }
    return SpikeTrain(std::move(spikes), Polarity::Bipolar);
}

Encoded lif_encode(const Signal& signal, const LIFParams& params) {
    params.validate();
    auto [unit, record] = min_max_normalize(signal);
    std::vector<double> centered;
    centered.reserve(unit.size());
    for (double s : unit.samples()) centered.push_back(s * 2.0 - 1.0);
    return Encoded{lif_encode_normalized(centered, params), record};
}

std::size_t lif_decode_window(const LIFParams& params) {
    const double w = 1.0 / (1.0 - params.membrane_constant + 1e-6);
    const auto rounded = static_cast<long long>(std::llround(w));
    return static_cast<std::size_t>(std::clamp<long long>(rounded, 1, 64));
}

Signal lif_decode(const SpikeTrain& spikes, const LIFParams& params,
                  const NormalizationRecord& record) {
    params.validate();
    const std::size_t n = spikes.size();
    const std::size_t w = lif_decode_window(params);
    // Windowed spike rate scaled by the threshold estimates the signal in
    // [-1,1] space; the spike rate of the integrator is amplitude/threshold.
    std::vector<double> out;
    out.reserve(n);
    double window_sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        window_sum += static_cast<double>(spikes[t]);
        if (t >= w) window_sum -= static_cast<double>(spikes[t - w]);
        const double centered = params.threshold * window_sum / static_cast<double>(w);
        out.push_back((centered + 1.0) / 2.0);
    }
    return denormalize(Signal(std::move(out)), record);
}

SpikeTrain pwm_encode_normalized(const std::vector<double>& unit, const PWMParams& params) {
    params.validate();
    const std::size_t n = unit.size();
    if (static_cast<std::size_t>(params.frequency) > n / 2) {
        throw InvalidParams("PWM frequency must not exceed half the signal length");
    }
    const double step = static_cast<double>(params.frequency) / static_cast<double>(n);
    std::vector<std::int8_t> spikes(n, 0);
    int prev_level = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double carrier = std::fmod(step * static_cast<double>(t), 1.0);
        const double neg_carrier = 1.0 - carrier;
        int level = 0;
        if (unit[t] < carrier) {
            level = 1;
        } else if (params.downspike && unit[t] > neg_carrier) {
            level = -1;
        }
        if (t > 0) {
            if (level == 1 && prev_level != 1) {
                spikes[t] = 1;
            } else if (level == -1 && prev_level != -1) {
                spikes[t] = -1;
            }
        }
        prev_level = level;
    }
    return SpikeTrain(std::move(spikes), Polarity::Bipolar);
}

Encoded pwm_encode(const Signal& signal, const PWMParams& params) {
    params.validate();
    auto [unit, record] = min_max_normalize(signal);
    return Encoded{pwm_encode_normalized(unit.samples(), params), record};
}

Signal pwm_decode(const SpikeTrain& spikes, const PWMParams& params,
                  const NormalizationRecord& record) {
    params.validate();
    const std::size_t n = spikes.size();
    const double step = static_cast<double>(params.frequency) / static_cast<double>(n);

    // Anchor each spike at the carrier value it crossed, then interpolate.
    std::vector<std::size_t> anchor_t;
    std::vector<double> anchor_v;
    for (std::size_t t = 0; t < n; ++t) {
        if (spikes[t] == 0) continue;
        const double carrier = std::fmod(step * static_cast<double>(t), 1.0);
        anchor_t.push_back(t);
        anchor_v.push_back(spikes[t] > 0 ? carrier : 1.0 - carrier);
    }

    std::vector<double> out(n, 0.5);  // no anchors: normalized midpoint
    if (!anchor_t.empty()) {
        for (std::size_t t = 0; t <= anchor_t.front(); ++t) out[t] = anchor_v.front();
        for (std::size_t k = 0; k + 1 < anchor_t.size(); ++k) {
            const std::size_t t0 = anchor_t[k];
            const std::size_t t1 = anchor_t[k + 1];
            const double v0 = anchor_v[k];
            const double v1 = anchor_v[k + 1];
            for (std::size_t t = t0 + 1; t <= t1; ++t) {
                const double frac = static_cast<double>(t - t0) / static_cast<double>(t1 - t0);
                out[t] = v0 + frac * (v1 - v0);
            }
        }
        for (std::size_t t = anchor_t.back(); t < n; ++t) out[t] = anchor_v.back();
    }
    return denormalize(Signal(std::move(out)), record);
}

std::vector<double> fir_lowpass(std::size_t filter_size, double cutoff) {
    if (filter_size < 1) {
        throw InvalidParams("FIR filter_size must be at least 1");
    }
    if (!(cutoff > 0.0) || !(cutoff < 0.5)) {
        throw InvalidParams("FIR cutoff must lie in (0, 0.5)");
    }
    std::vector<double> coeff(filter_size);
    const double center = static_cast<double>(filter_size - 1) / 2.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < filter_size; ++k) {
        const double x = static_cast<double>(k) - center;
        double window = 1.0;
        if (filter_size > 1) {
            window = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(k) /
                                            static_cast<double>(filter_size - 1));
        }
        coeff[k] = 2.0 * cutoff * sinc(2.0 * cutoff * x) * window;
        sum += coeff[k];
    }
    for (double& c : coeff) c /= sum;
    return coeff;
}

SpikeTrain bsa_encode_normalized(const std::vector<double>& unit, const BSAParams& params) {
    params.validate();
    const std::size_t n = unit.size();
    const auto fir = fir_lowpass(static_cast<std::size_t>(params.filter_order) + 1,
                                 params.filter_cutoff);
    if (fir.size() > n) {
        throw InvalidParams("BSA filter size exceeds signal length");
    }
    std::vector<double> work = unit;  // caller's signal stays untouched
    std::vector<std::int8_t> spikes(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t span = std::min(fir.size(), n - t);
        double err1 = 0.0;
        double err2 = 0.0;
        for (std::size_t j = 0; j < span; ++j) {
            err1 += std::abs(work[t + j] - fir[j]);
            err2 += std::abs(work[t + j]);
        }
        if (err1 <= err2 - params.threshold) {
            spikes[t] = 1;
            for (std::size_t j = 0; j < span; ++j) {
                work[t + j] -= fir[j];
            }
        }
    }
    return SpikeTrain(std::move(spikes), Polarity::Unipolar);
}

Encoded bsa_encode(const Signal& signal, const BSAParams& params) {
    params.validate();
    auto [unit, record] = min_max_normalize(signal);
    return Encoded{bsa_encode_normalized(unit.samples(), params), record};
}

Signal bsa_decode(const SpikeTrain& spikes, const BSAParams& params,
                  const NormalizationRecord& record) {
    params.validate();
    const std::size_t n = spikes.size();
    const auto fir = fir_lowpass(static_cast<std::size_t>(params.filter_order) + 1,
                                 params.filter_cutoff);
    std::vector<double> out(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        if (spikes[t] == 0) continue;
        const std::size_t span = std::min(fir.size(), n - t);
        for (std::size_t j = 0; j < span; ++j) {
            out[t + j] += fir[j];
        }
    }
    return denormalize(Signal(std::move(out)), record);
}

std::vector<double> grf_encode(double value, const GRFParams& params) {
    params.validate();
    if (!std::isfinite(value)) {
        throw InvalidParams("GRF input value must be finite");
    }
    const auto bins = static_cast<std::size_t>(params.num_bins);
    const double spacing = (params.value_max - params.value_min) / static_cast<double>(bins - 1);
    const double sigma = params.width_scale * spacing;
    std::vector<double> responses(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        const double center = params.value_min + spacing * static_cast<double>(i);
        const double d = value - center;
        responses[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    }
    return responses;
}

}  // namespace spikecodec
