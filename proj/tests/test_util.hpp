#pragma once

#include <atomic>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "spikecodec/rng.hpp"
#include "spikecodec/signal.hpp"

namespace test_util {

inline spikecodec::Signal random_signal(std::mt19937_64& gen, std::size_t n, double lo = -2.0,
                                        double hi = 2.0) {
    std::vector<double> samples(n);
    for (double& s : samples) {
        s = lo + spikecodec::rng::uniform01(gen) * (hi - lo);
    }
    return spikecodec::Signal(std::move(samples));
}

/// Random sum of a few sinusoids; per-step change bounded by max_step.
inline spikecodec::Signal smooth_signal(std::mt19937_64& gen, std::size_t n, double max_step) {
    std::vector<double> samples(n, 0.0);
    const int tones = 2 + static_cast<int>(gen() % 3);
    for (int k = 0; k < tones; ++k) {
        const double freq = 0.5 + 4.0 * spikecodec::rng::uniform01(gen);  // cycles over signal
        const double phase = 6.28318530717958647692 * spikecodec::rng::uniform01(gen);
        const double amp = 0.2 + spikecodec::rng::uniform01(gen);
        for (std::size_t t = 0; t < n; ++t) {
            samples[t] += amp * std::sin(6.28318530717958647692 * freq * t / n + phase);
        }
    }
    // Rescale so the largest step is exactly max_step.
    double largest = 0.0;
    for (std::size_t t = 1; t < n; ++t) {
        largest = std::max(largest, std::abs(samples[t] - samples[t - 1]));
    }
    if (largest > 0.0) {
        const double k = max_step / largest;
        for (double& s : samples) s *= k;
    }
    return spikecodec::Signal(std::move(samples));
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("spikecodec_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace test_util
