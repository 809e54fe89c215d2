#include "spikecodec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spikecodec/rng.hpp"

namespace spikecodec {

ParamRange ParamRange::continuous(double low, double high, bool log_scale) {
    ParamRange r;
    r.kind = Kind::Continuous;
    r.low = low;
    r.high = high;
    r.log_scale = log_scale;
    r.validate();
    return r;
}

ParamRange ParamRange::integer(std::int64_t low, std::int64_t high, bool log_scale) {
    ParamRange r;
    r.kind = Kind::Integer;
    r.low = static_cast<double>(low);
    r.high = static_cast<double>(high);
    r.log_scale = log_scale;
    r.validate();
    return r;
}

ParamRange ParamRange::choice(std::vector<ParamValue> options) {
    ParamRange r;
    r.kind = Kind::Choice;
    r.choices = std::move(options);
    r.validate();
    return r;
}

void ParamRange::validate() const {
    if (kind == Kind::Choice) {
        if (choices.empty()) throw InvalidParams("choice range needs at least one option");
        return;
    }
    if (!(low < high)) throw InvalidParams("range low must be below high");
    if (log_scale && !(low > 0.0)) {
        throw InvalidParams("log-scaled range requires a positive lower bound");
    }
}

SearchSpace default_search_space(Method method, const Signal& signal) {
    const auto [lo, hi] = std::minmax_element(signal.samples().begin(), signal.samples().end());
    const double range = *hi - *lo;
    if (range <= 0.0) throw DegenerateSignal("cannot build a search space for a constant signal");

    SearchSpace space;
    switch (method) {
        case Method::SF:
            space["threshold"] = ParamRange::continuous(1e-3 * range, range);
            break;
        case Method::LIF:
            space["threshold"] = ParamRange::continuous(0.01, 10.0, /*log_scale=*/true);
            space["membrane_constant"] = ParamRange::continuous(0.5, 1.0);
            break;
        case Method::PWM: {
            const auto max_freq = static_cast<std::int64_t>(std::max<std::size_t>(2, signal.size() / 4));
            space["frequency"] = ParamRange::integer(1, max_freq, /*log_scale=*/true);
            space["downspike"] = ParamRange::choice({ParamValue{false}, ParamValue{true}});
            break;
        }
        case Method::BSA: {
            const auto max_order =
                std::min<std::int64_t>(64, static_cast<std::int64_t>(signal.size()) - 1);
            space["filter_order"] = ParamRange::integer(2, max_order);
            space["filter_cutoff"] = ParamRange::continuous(0.01, 0.49);
            space["threshold"] = ParamRange::continuous(1e-3, 2.0, /*log_scale=*/true);
            break;
        }
    }
    return space;
}

namespace {

ParamValue sample_range(const ParamRange& range, std::mt19937_64& gen) {
    const double u = rng::uniform01(gen);
    switch (range.kind) {
        case ParamRange::Kind::Continuous: {
            if (range.log_scale) {
                const double lo = std::log(range.low);
                const double hi = std::log(range.high);
                return ParamValue{std::exp(lo + u * (hi - lo))};
            }
            return ParamValue{range.low + u * (range.high - range.low)};
        }
        case ParamRange::Kind::Integer: {
            const auto lo = static_cast<std::int64_t>(range.low);
            const auto hi = static_cast<std::int64_t>(range.high);
            std::int64_t v = 0;
            if (range.log_scale) {
                v = std::llround(std::exp(std::log(range.low) + u * (std::log(range.high) -
                                                                     std::log(range.low))));
            } else {
                v = lo + static_cast<std::int64_t>(u * static_cast<double>(hi - lo + 1));
            }
            return ParamValue{std::clamp(v, lo, hi)};
        }
        case ParamRange::Kind::Choice: {
            auto idx = static_cast<std::size_t>(u * static_cast<double>(range.choices.size()));
            idx = std::min(idx, range.choices.size() - 1);
            return range.choices[idx];
        }
    }
    throw InvalidParams("unknown range kind");
}

}  // namespace

ParamSet sample_params(const SearchSpace& space, std::uint64_t seed, std::uint64_t trial_index) {
    std::mt19937_64 gen(rng::derive_seed(seed, trial_index));
    ParamSet params;
    for (const auto& [key, range] : space) {
        params[key] = sample_range(range, gen);
    }
    return params;
}

void apply_space_overrides(SearchSpace& space, Method method,
                           const std::map<std::string, std::string>& overrides,
                           bool method_prefixed) {
    for (const auto& [full_key, value] : overrides) {
        std::string key = full_key;
        if (method_prefixed) {
            const std::size_t dot = key.find('.');
            if (dot == std::string::npos) {
                throw InvalidParams("search-space override missing method prefix: " + full_key);
            }
            const Method key_method = method_from_name(key.substr(0, dot));
            if (key_method != method) continue;
            key = key.substr(dot + 1);
        }

        std::string param = key;
        std::string field;
        const std::size_t dot = key.rfind('.');
        if (dot != std::string::npos &&
            (key.ends_with(".low") || key.ends_with(".high") || key.ends_with(".log"))) {
            param = key.substr(0, dot);
            field = key.substr(dot + 1);
        }

        auto it = space.find(param);
        if (it == space.end()) {
            throw InvalidParams("search-space override names unknown parameter: " + full_key);
        }
        ParamRange& range = it->second;
        if (field == "low") {
            range.low = std::stod(value);
        } else if (field == "high") {
            range.high = std::stod(value);
        } else if (field == "log") {
            range.log_scale = value == "true";
        } else if (range.kind == ParamRange::Kind::Choice) {
            // Pin or reopen a boolean choice parameter.
            if (value == "true") {
                range.choices = {ParamValue{true}};
            } else if (value == "false") {
                range.choices = {ParamValue{false}};
            } else if (value == "both") {
                range.choices = {ParamValue{false}, ParamValue{true}};
            } else {
                throw InvalidParams("invalid choice override value: " + value);
            }
        } else {
            throw InvalidParams("search-space override names unknown field: " + full_key);
        }
        range.validate();
    }
}

OptimizationResult optimize(Method method, const Signal& signal, const SearchSpace& space,
                            std::size_t n_trials, std::uint64_t seed) {
    if (n_trials < 1) throw InvalidParams("optimize needs at least one trial");
    if (space.empty()) throw EmptySpace("search space has no parameters");
    for (const auto& [key, range] : space) {
        (void)key;
        range.validate();
    }

    OptimizationResult result;
    result.seed = seed;
    result.n_trials = n_trials;
    result.trials.reserve(n_trials);

    std::size_t best_index = 0;
    for (std::size_t i = 0; i < n_trials; ++i) {
        ParamSet sampled = sample_params(space, seed, i);
        const MethodParams params = params_from_set(method, sampled);
        const double err = mse(signal, reconstruct(method, signal, params));
        result.trials.push_back(Trial{std::move(sampled), err});
        if (err < result.trials[best_index].mse) {
            best_index = i;
        }
    }
    result.best_params = result.trials[best_index].params;
    result.best_mse = result.trials[best_index].mse;
    return result;
}

}  // namespace spikecodec
