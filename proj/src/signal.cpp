#include "spikecodec/signal.hpp"

#include <algorithm>
#include <cmath>

namespace spikecodec {

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw InvalidParams("signal must contain at least one sample");
    }
    for (double s : samples_) {
        if (!std::isfinite(s)) {
            throw InvalidParams("signal samples must be finite");
        }
    }
}

SpikeTrain::SpikeTrain(std::vector<std::int8_t> spikes, Polarity polarity)
    : spikes_(std::move(spikes)), polarity_(polarity) {
    for (std::int8_t s : spikes_) {
        if (s < -1 || s > 1) {
            throw InvalidParams("spike values must lie in {-1, 0, +1}");
        }
        if (polarity_ == Polarity::Unipolar && s < 0) {
            throw InvalidParams("unipolar spike trains cannot contain -1");
        }
    }
}

std::pair<Signal, NormalizationRecord> min_max_normalize(const Signal& signal) {
    const auto [lo_it, hi_it] = std::minmax_element(signal.samples().begin(), signal.samples().end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (hi <= lo) {
        throw DegenerateSignal("min-max normalization of a constant signal");
    }
    const double scale = hi - lo;
    std::vector<double> out;
    out.reserve(signal.size());
    for (double s : signal.samples()) {
        out.push_back((s - lo) / scale);
    }
    return {Signal(std::move(out)), NormalizationRecord{NormKind::MinMax, lo, scale}};
}

std::pair<Signal, NormalizationRecord> zscore_normalize(const Signal& signal) {
    const std::size_t n = signal.size();
    if (n < 2) {
        throw InvalidParams("z-score normalization needs at least two samples");
    }
    double mean = 0.0;
    for (double s : signal.samples()) mean += s;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double s : signal.samples()) var += (s - mean) * (s - mean);
    var /= static_cast<double>(n);
    if (var <= 0.0) {
        throw DegenerateSignal("z-score normalization of a zero-variance signal");
    }
    const double std_dev = std::sqrt(var);
    std::vector<double> out;
    out.reserve(n);
    for (double s : signal.samples()) {
        out.push_back((s - mean) / std_dev);
    }
    return {Signal(std::move(out)), NormalizationRecord{NormKind::ZScore, mean, std_dev}};
}

Signal denormalize(const Signal& signal, const NormalizationRecord& record) {
    std::vector<double> out;
    out.reserve(signal.size());
    for (double s : signal.samples()) {
        out.push_back(s * record.scale + record.offset);
    }
    return Signal(std::move(out));
}

double mse(const Signal& a, const Signal& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("mse requires equal-length signals");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

Signal running_mse(const Signal& a, const Signal& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("running_mse requires equal-length signals");
    }
    std::vector<double> out;
    out.reserve(a.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
        out.push_back(acc / static_cast<double>(i + 1));
    }
    return Signal(std::move(out));
}

double sparsity(const SpikeTrain& spikes) {
    if (spikes.size() == 0) return 0.0;
    std::size_t nonzero = 0;
    for (std::int8_t s : spikes.values()) {
        if (s != 0) ++nonzero;
    }
    return static_cast<double>(nonzero) / static_cast<double>(spikes.size());
}

}  // namespace spikecodec
