#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "spikecodec/encoders.hpp"

namespace spikecodec {

enum class Method { LIF, SF, PWM, BSA };

inline constexpr Method kAllMethods[] = {Method::LIF, Method::SF, Method::PWM, Method::BSA};

std::string method_name(Method method);
Method method_from_name(std::string_view name);

using MethodParams = std::variant<SFParams, LIFParams, PWMParams, BSAParams>;
using ParamValue = std::variant<double, std::int64_t, bool>;
using ParamSet = std::map<std::string, ParamValue>;

MethodParams params_from_set(Method method, const ParamSet& set);
ParamSet params_to_set(const MethodParams& params);

/// Parses a string bag (e.g. a key=value params file) into a ParamSet using
/// the method's declared key types. Unknown keys are rejected.
ParamSet param_set_from_strings(Method method,
                                const std::map<std::string, std::string>& raw);

std::string param_value_to_string(const ParamValue& value);

struct EncodeResult {
    SpikeTrain spikes;
    std::optional<NormalizationRecord> record;  // empty for SF
};

EncodeResult encode(Method method, const Signal& signal, const MethodParams& params);

Signal decode(Method method, const SpikeTrain& spikes, const MethodParams& params,
              const std::optional<NormalizationRecord>& record, double sf_initial = 0.0);

/// encode -> decode round trip in original signal units. SF decoding replays
/// the encoder's baseline path (initial value 0).
Signal reconstruct(Method method, const Signal& signal, const MethodParams& params);

}  // namespace spikecodec
