#pragma once

#include <cstdint>
#include <vector>

#include "spikecodec/converter.hpp"

namespace spikecodec {

/// One tunable dimension of a search space. Continuous and Integer ranges may
/// be sampled on a log scale; Choice picks uniformly from a fixed set.
struct ParamRange {
    enum class Kind { Continuous, Integer, Choice };

    static ParamRange continuous(double low, double high, bool log_scale = false);
    static ParamRange integer(std::int64_t low, std::int64_t high, bool log_scale = false);
    static ParamRange choice(std::vector<ParamValue> options);

    Kind kind = Kind::Continuous;
    double low = 0.0;
    double high = 1.0;
    bool log_scale = false;
    std::vector<ParamValue> choices;

    void validate() const;
};

using SearchSpace = std::map<std::string, ParamRange>;

struct Trial {
    ParamSet params;
    double mse;
};

struct OptimizationResult {
    ParamSet best_params;
    double best_mse = 0.0;
    std::vector<Trial> trials;
    std::uint64_t seed = 0;
    std::size_t n_trials = 0;
};

/// Default per-method search ranges. SF's threshold range scales with the
/// signal's dynamic range; PWM's frequency cap scales with its length.
SearchSpace default_search_space(Method method, const Signal& signal);

/// Seeded uniform random search minimizing reconstruction MSE. Each trial's
/// sample is derived from (seed, trial index), so results are deterministic
/// and a larger budget with the same seed extends the same trial sequence.
/// Ties break toward the earliest trial.
OptimizationResult optimize(Method method, const Signal& signal, const SearchSpace& space,
                            std::size_t n_trials, std::uint64_t seed);

/// Samples one parameter set from the space (exposed for tests).
ParamSet sample_params(const SearchSpace& space, std::uint64_t seed, std::uint64_t trial_index);

/// Reshapes a search space from flat key=value overrides:
///   <param>.low, <param>.high  -> range bounds
///   <param>.log                -> "true"/"false"
///   <param>                    -> pin a choice parameter ("true"/"false"/"both")
/// With method_prefixed, keys carry a leading "<method>." and entries for
/// other methods are skipped. Unknown parameters are rejected.
void apply_space_overrides(SearchSpace& space, Method method,
                           const std::map<std::string, std::string>& overrides,
                           bool method_prefixed);

}  // namespace spikecodec
