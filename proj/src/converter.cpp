#include "spikecodec/converter.hpp"

#include <charconv>
#include <cstdlib>

namespace spikecodec {

namespace {

double require_double(const ParamSet& set, const std::string& key) {
    auto it = set.find(key);
    if (it == set.end()) throw InvalidParams("missing parameter: " + key);
    if (const auto* d = std::get_if<double>(&it->second)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) {
        return static_cast<double>(*i);
    }
    throw InvalidParams("parameter " + key + " must be numeric");
}

std::int64_t require_int(const ParamSet& set, const std::string& key) {
    auto it = set.find(key);
    if (it == set.end()) throw InvalidParams("missing parameter: " + key);
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
    throw InvalidParams("parameter " + key + " must be an integer");
}

bool require_bool(const ParamSet& set, const std::string& key) {
    auto it = set.find(key);
    if (it == set.end()) throw InvalidParams("missing parameter: " + key);
    if (const auto* b = std::get_if<bool>(&it->second)) return *b;
    throw InvalidParams("parameter " + key + " must be a boolean");
}

enum class ParamType { Double, Int, Bool };

const std::map<std::string, ParamType>& param_schema(Method method) {
    static const std::map<std::string, ParamType> sf = {{"threshold", ParamType::Double}};
    static const std::map<std::string, ParamType> lif = {
        {"threshold", ParamType::Double}, {"membrane_constant", ParamType::Double}};
    static const std::map<std::string, ParamType> pwm = {
        {"frequency", ParamType::Int}, {"downspike", ParamType::Bool}};
    static const std::map<std::string, ParamType> bsa = {{"filter_order", ParamType::Int},
                                                         {"filter_cutoff", ParamType::Double},
                                                         {"threshold", ParamType::Double}};
    switch (method) {
        case Method::SF: return sf;
        case Method::LIF: return lif;
        case Method::PWM: return pwm;
        case Method::BSA: return bsa;
    }
    throw InvalidParams("unknown method");
}

}  // namespace

std::string method_name(Method method) {
    switch (method) {
        case Method::LIF: return "lif";
        case Method::SF: return "sf";
        case Method::PWM: return "pwm";
        case Method::BSA: return "bsa";
    }
    throw InvalidParams("unknown method");
}

Method method_from_name(std::string_view name) {
    if (name == "lif") return Method::LIF;
    if (name == "sf") return Method::SF;
    if (name == "pwm") return Method::PWM;
    if (name == "bsa") return Method::BSA;
    throw InvalidParams("unknown method: " + std::string(name));
}

MethodParams params_from_set(Method method, const ParamSet& set) {
    switch (method) {
        case Method::SF: {
            SFParams p{require_double(set, "threshold")};
            p.validate();
            return p;
        }
        case Method::LIF: {
            LIFParams p{require_double(set, "threshold"), require_double(set, "membrane_constant")};
            p.validate();
            return p;
        }
        case Method::PWM: {
            PWMParams p{require_int(set, "frequency"), require_bool(set, "downspike")};
            p.validate();
            return p;
        }
        case Method::BSA: {
            BSAParams p{require_int(set, "filter_order"), require_double(set, "filter_cutoff"),
                        require_double(set, "threshold")};
            p.validate();
            return p;
        }
    }
    throw InvalidParams("unknown method");
}

ParamSet params_to_set(const MethodParams& params) {
    ParamSet set;
    std::visit(
        [&set](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SFParams>) {
                set["threshold"] = p.threshold;
            } else if constexpr (std::is_same_v<T, LIFParams>) {
                set["threshold"] = p.threshold;
                set["membrane_constant"] = p.membrane_constant;
            } else if constexpr (std::is_same_v<T, PWMParams>) {
                set["frequency"] = p.frequency;
                set["downspike"] = p.downspike;
            } else {
                set["filter_order"] = p.filter_order;
                set["filter_cutoff"] = p.filter_cutoff;
                set["threshold"] = p.threshold;
            }
        },
        params);
    return set;
}

ParamSet param_set_from_strings(Method method, const std::map<std::string, std::string>& raw) {
    const auto& schema = param_schema(method);
    ParamSet set;
    for (const auto& [key, value] : raw) {
        auto it = schema.find(key);
        if (it == schema.end()) {
            throw InvalidParams("unknown parameter for " + method_name(method) + ": " + key);
        }
        switch (it->second) {
            case ParamType::Double: {
                double d = 0.0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
                if (ec != std::errc{} || p != value.data() + value.size()) {
                    throw InvalidParams("parameter " + key + " is not a number: " + value);
                }
                set[key] = d;
                break;
            }
            case ParamType::Int: {
                std::int64_t i = 0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), i);
                if (ec != std::errc{} || p != value.data() + value.size()) {
                    throw InvalidParams("parameter " + key + " is not an integer: " + value);
                }
                set[key] = i;
                break;
            }
            case ParamType::Bool: {
                if (value == "true" || value == "1") {
                    set[key] = true;
                } else if (value == "false" || value == "0") {
                    set[key] = false;
                } else {
                    throw InvalidParams("parameter " + key + " is not a boolean: " + value);
                }
                break;
            }
        }
    }
    return set;
}

std::string param_value_to_string(const ParamValue& value) {
    if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
    if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    const double d = std::get<double>(value);
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, p);
}

EncodeResult encode(Method method, const Signal& signal, const MethodParams& params) {
    switch (method) {
        case Method::SF:
            return EncodeResult{sf_encode(signal, std::get<SFParams>(params)), std::nullopt};
        case Method::LIF: {
            auto enc = lif_encode(signal, std::get<LIFParams>(params));
            return EncodeResult{std::move(enc.spikes), enc.record};
        }
        case Method::PWM: {
            auto enc = pwm_encode(signal, std::get<PWMParams>(params));
            return EncodeResult{std::move(enc.spikes), enc.record};
        }
        case Method::BSA: {
            auto enc = bsa_encode(signal, std::get<BSAParams>(params));
            return EncodeResult{std::move(enc.spikes), enc.record};
        }
    }
    throw InvalidParams("unknown method");
}

Signal decode(Method method, const SpikeTrain& spikes, const MethodParams& params,
              const std::optional<NormalizationRecord>& record, double sf_initial) {
    switch (method) {
        case Method::SF:
            return sf_decode(spikes, std::get<SFParams>(params), sf_initial);
        case Method::LIF:
            if (!record) throw InvalidParams("LIF decode needs the encoding's normalization record");
            return lif_decode(spikes, std::get<LIFParams>(params), *record);
        case Method::PWM:
            if (!record) throw InvalidParams("PWM decode needs the encoding's normalization record");
            return pwm_decode(spikes, std::get<PWMParams>(params), *record);
        case Method::BSA:
            if (!record) throw InvalidParams("BSA decode needs the encoding's normalization record");
            return bsa_decode(spikes, std::get<BSAParams>(params), *record);
    }
    throw InvalidParams("unknown method");
}

Signal reconstruct(Method method, const Signal& signal, const MethodParams& params) {
    auto enc = encode(method, signal, params);
    // SF decoding replays the encoder's baseline path, which starts at 0.
    return decode(method, enc.spikes, params, enc.record, 0.0);
}

}  // namespace spikecodec
