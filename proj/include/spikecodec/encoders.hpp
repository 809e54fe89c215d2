#pragma once

#include <cstdint>
#include <vector>

#include "spikecodec/signal.hpp"

namespace spikecodec {

// Each converter is a pure encode/decode pair. Methods that normalize
// internally (LIF, PWM, BSA) return the NormalizationRecord their decoder
// needs; the *_normalized entry points operate on pre-normalized samples and
// are what the benchmark times (normalization excluded).

struct SFParams {
    double threshold = 0.1;
    void validate() const;
};

struct LIFParams {
    double threshold = 1.0;
    double membrane_constant = 0.9;  // in (0, 1]
    void validate() const;
};

struct PWMParams {
    std::int64_t frequency = 32;  // carrier periods over the full signal
    bool downspike = true;
    void validate() const;
};

struct BSAParams {
    std::int64_t filter_order = 8;  // filter_size = filter_order + 1
    double filter_cutoff = 0.1;     // in (0, 0.5), sampling frequency 1
    double threshold = 0.05;
    void validate() const;
};

struct GRFParams {
    std::int64_t num_bins = 5;
    double value_min = 0.0;
    double value_max = 1.0;
    double width_scale = 1.0;
    void validate() const;
};

struct Encoded {
    SpikeTrain spikes;
    NormalizationRecord record;
};

// Step-Forward: adaptive baseline, raw amplitude units, no normalization.
SpikeTrain sf_encode(const Signal& signal, const SFParams& params);
Signal sf_decode(const SpikeTrain& spikes, const SFParams& params, double initial_value);

// Leaky Integrate-and-Fire: min-max to [0,1], then mapped to [-1,1] before
// integration. lif_encode_normalized takes the [-1,1] samples directly and
// can expose the per-step membrane voltage for inspection.
Encoded lif_encode(const Signal& signal, const LIFParams& params);
SpikeTrain lif_encode_normalized(const std::vector<double>& centered, const LIFParams& params,
                                 std::vector<double>* voltage_trace = nullptr);
Signal lif_decode(const SpikeTrain& spikes, const LIFParams& params,
                  const NormalizationRecord& record);

/// Causal smoothing window used by the LIF decoder:
/// round(1 / (1 - membrane_constant + 1e-6)), clamped to [1, 64].
std::size_t lif_decode_window(const LIFParams& params);

// PWM: rising sawtooth carrier in [0,1), carrier(t) = frac(frequency*(t-1)/n);
// spikes mark comparator transitions. pwm_encode_normalized takes [0,1]
// samples directly.
Encoded pwm_encode(const Signal& signal, const PWMParams& params);
SpikeTrain pwm_encode_normalized(const std::vector<double>& unit, const PWMParams& params);
Signal pwm_decode(const SpikeTrain& spikes, const PWMParams& params,
                  const NormalizationRecord& record);

/// Hamming-windowed sinc lowpass, coefficients normalized to unit sum.
std::vector<double> fir_lowpass(std::size_t filter_size, double cutoff);

// BSA: greedy filter subtraction with subtractive threshold
// (spike when err1 <= err2 - threshold); unipolar output.
Encoded bsa_encode(const Signal& signal, const BSAParams& params);
SpikeTrain bsa_encode_normalized(const std::vector<double>& unit, const BSAParams& params);
Signal bsa_decode(const SpikeTrain& spikes, const BSAParams& params,
                  const NormalizationRecord& record);

/// Gaussian receptive field population code; encode-only.
/// response(i) = exp(-(value - center_i)^2 / (2 sigma^2)),
/// sigma = width_scale * bin spacing, centers even across [value_min, value_max].
std::vector<double> grf_encode(double value, const GRFParams& params);

}  // namespace spikecodec
