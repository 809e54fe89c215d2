#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spikecodec/error.hpp"

namespace spikecodec {

/// Fixed-length sequence of finite real amplitudes, one per time step.
class Signal {
public:
    explicit Signal(std::vector<double> samples);

    std::size_t size() const { return samples_.size(); }
    double operator[](std::size_t i) const { return samples_[i]; }
    double front() const { return samples_.front(); }
    const std::vector<double>& samples() const { return samples_; }

    bool operator==(const Signal& other) const { return samples_ == other.samples_; }

private:
    std::vector<double> samples_;
};

enum class Polarity { Bipolar, Unipolar };

/// Spike sequence over {-1, 0, +1} (unipolar: {0, +1}), same length as the
/// signal it encodes.
class SpikeTrain {
public:
    SpikeTrain(std::vector<std::int8_t> spikes, Polarity polarity);

    std::size_t size() const { return spikes_.size(); }
    std::int8_t operator[](std::size_t i) const { return spikes_[i]; }
    const std::vector<std::int8_t>& values() const { return spikes_; }
    Polarity polarity() const { return polarity_; }

    bool operator==(const SpikeTrain& other) const {
        return polarity_ == other.polarity_ && spikes_ == other.spikes_;
    }

private:
    std::vector<std::int8_t> spikes_;
    Polarity polarity_;
};

enum class NormKind { MinMax, ZScore };

/// Invertible affine map: normalized = (x - offset) / scale, scale > 0.
struct NormalizationRecord {
    NormKind kind;
    double offset;
    double scale;
};

/// Rescales to [0, 1]. Throws DegenerateSignal when max == min.
std::pair<Signal, NormalizationRecord> min_max_normalize(const Signal& signal);

/// Shifts/scales to mean 0, population variance 1 (divide by n).
/// Throws DegenerateSignal on zero variance; requires length >= 2.
std::pair<Signal, NormalizationRecord> zscore_normalize(const Signal& signal);

Signal denormalize(const Signal& signal, const NormalizationRecord& record);

double mse(const Signal& a, const Signal& b);

/// Element t is the mean squared error over steps 1..t; the last element
/// equals mse(a, b).
Signal running_mse(const Signal& a, const Signal& b);

/// Fraction of nonzero entries, in [0, 1].
double sparsity(const SpikeTrain& spikes);

}  // namespace spikecodec
