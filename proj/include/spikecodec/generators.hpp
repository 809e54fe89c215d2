#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "spikecodec/signal.hpp"

namespace spikecodec {

enum class SignalKind { Vibration, Trended, Rectangular, Sinusoidal };

std::string kind_name(SignalKind kind);
SignalKind kind_from_name(std::string_view name);

/// Deterministic waveform recipe: identical spec => bit-identical output.
struct GeneratorSpec {
    SignalKind kind = SignalKind::Sinusoidal;
    std::size_t length = 16384;
    std::uint64_t seed = 0;
    std::size_t periods = 8;
    double noise_std = 0.1;
    double trend_slope = 3.0;
};

/// Synthesizes the requested waveform and z-normalizes it (mean 0,
/// population variance 1). Throws InvalidSpec on bad parameters.
Signal generate(const GeneratorSpec& spec);

}  // namespace spikecodec
