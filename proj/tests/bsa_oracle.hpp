#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

// Straightforward transcription of the BSA encoding loop, written
// independently of the library implementation and kept deliberately naive
// (1-based indexing, explicit bounds guard). Used as the spike-for-spike
// reference the real encoder is checked against.

namespace bsa_oracle {

inline std::vector<std::int8_t> encode(const std::vector<double>& normalized_signal,
                                       const std::vector<double>& fir_coeff, double threshold) {
    const std::size_t time_steps = normalized_signal.size();
    const std::size_t filter_size = fir_coeff.size();
    std::vector<double> signal = normalized_signal;
    std::vector<std::int8_t> spikes(time_steps, 0);
    for (std::size_t t = 1; t <= time_steps; ++t) {
        double err1 = 0.0;
        double err2 = 0.0;
        for (std::size_t j = 1; j <= filter_size; ++j) {
            if (t + j - 1 <= time_steps) {
                err1 += std::abs(signal[t + j - 2] - fir_coeff[j - 1]);
                err2 += std::abs(signal[t + j - 2]);
            }
        }
        if (err1 <= err2 - threshold) {
            spikes[t - 1] = 1;
            for (std::size_t j = 1; j <= filter_size; ++j) {
                if (t + j - 1 <= time_steps) {
                    signal[t + j - 2] -= fir_coeff[j - 1];
                }
            }
        }
    }
    return spikes;
}

}  // namespace bsa_oracle
