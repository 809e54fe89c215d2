#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Deterministic randomness helpers. Generated outputs must be reproducible
// bit-for-bit from a seed, so everything here is pinned to fully specified
// algorithms: mt19937_64 for the stream, splitmix64 for seed derivation, and
// the Marsaglia polar method for Gaussian variates (std::normal_distribution
// is not portable across standard libraries).

namespace spikecodec::rng {

inline std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent sub-seed for trial `index`; sampling a trial never
/// depends on how many trials ran before it.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Uniform double in [0, 1) using the top 53 bits of the generator output.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Marsaglia polar method. Each accepted pair yields two variates; the one
/// derived from the first uniform is returned first, the other is cached.
class GaussianSource {
public:
    explicit GaussianSource(std::mt19937_64& gen) : gen_(gen) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0, v = 0.0, s = 0.0;
        do {
            u = 2.0 * uniform01(gen_) - 1.0;
            v = 2.0 * uniform01(gen_) - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64& gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace spikecodec::rng
