#include "rrt/experiments.hpp"

#include <stdexcept>

#include "rrt/harness.hpp"
#include "rrt/rt_algorithm.hpp"

namespace rrt {

std::vector<FunctionalRecord> simulate_functionals(std::size_t n, std::size_t reps,
                                                   std::uint64_t seed, unsigned threads) {
    if (n < 1 || reps < 1) {
        throw std::invalid_argument("simulate: n and reps must be at least 1");
    }
    return replicate<FunctionalRecord>(
        reps, seed, [n](CounterRng& rng, std::size_t) { return functional_record(grow_chain(n, rng)); },
        threads);
}

std::vector<SeriesValues> sample_limits(const LimitSampleConfig& config, unsigned threads) {
    if (config.reps < 1) {
        throw std::invalid_argument("limits: reps must be at least 1");
    }
    if (config.mode == LimitMode::conditional && !config.tree) {
        throw std::invalid_argument("limits: conditional mode needs a tree");
    }
    if (config.mode == LimitMode::from_input && config.input_n < 1) {
        throw std::invalid_argument("limits: input mode needs input_n >= 1");
    }
    const auto& opts = config.series;
    return replicate<SeriesValues>(
        config.reps, config.seed,
        [&](CounterRng& rng, std::size_t) {
            switch (config.mode) {
                case LimitMode::unconditional:
                    return LimitTree::unconditional(rng.key(), opts.stick_cut).series(opts);
                case LimitMode::conditional:
                    return LimitTree::conditional(*config.tree, rng.key(), opts.stick_cut).series(opts);
                case LimitMode::from_input: {
                    std::vector<double> t(config.input_n - 1);
                    for (auto& v : t) v = rng.uniform();
                    RtTrace trace = rt_build(t, config.input_n);
                    return LimitTree::from_input(trace, CounterRng::derive(rng.key(), 1), opts.stick_cut)
                        .series(opts);
                }
            }
            throw std::logic_error("unreachable limit mode");
        },
        threads);
}

LimitMode parse_limit_mode(const std::string& name) {
    if (name == "unconditional") return LimitMode::unconditional;
    if (name == "conditional") return LimitMode::conditional;
    if (name == "input" || name == "from_input") return LimitMode::from_input;
    throw std::invalid_argument("unknown limit mode '" + name + "'");
}

std::string to_string(LimitMode mode) {
    switch (mode) {
        case LimitMode::unconditional: return "unconditional";
        case LimitMode::conditional: return "conditional";
        case LimitMode::from_input: return "input";
    }
    return "?";
}

}  // namespace rrt
