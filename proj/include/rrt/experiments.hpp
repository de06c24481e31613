#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrt/functionals.hpp"
#include "rrt/limit_tree.hpp"

namespace rrt {

//! Functional records of independent X_n samples, one per replication.
std::vector<FunctionalRecord> simulate_functionals(std::size_t n, std::size_t reps,
                                                   std::uint64_t seed, unsigned threads = 1);

struct LimitSampleConfig {
    LimitMode mode = LimitMode::unconditional;
    std::size_t reps = 1000;
    std::uint64_t seed = 1;
    SeriesOptions series;
    //! Conditioning tree for LimitMode::conditional.
    std::optional<HarrisTree> tree;
    //! Tree size built from the RT input for LimitMode::from_input.
    std::size_t input_n = 100;
};

//! Truncated (Y, Z, W) draws, one per replication.
std::vector<SeriesValues> sample_limits(const LimitSampleConfig& config, unsigned threads = 1);

LimitMode parse_limit_mode(const std::string& name);
std::string to_string(LimitMode mode);

}  // namespace rrt
