#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "rrt/random.hpp"

namespace rrt {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t reps = 0;
    std::optional<double> target;
    std::optional<double> z_score;

    //! |z| < bands, or an exact hit when the standard error is zero.
    bool within(double bands = 3.0) const;
    std::string str() const;
};

//! Sum by recursive halving; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

Estimate make_estimate(std::span<const double> samples, std::optional<double> target = std::nullopt);

//! Threads from RRT_THREADS, else the hardware concurrency (at least 1).
unsigned default_threads();

//! Stream for replication r of a run seeded with `seed`.
inline CounterRng replication_stream(std::uint64_t seed, std::size_t rep) {
    return CounterRng(CounterRng::derive(CounterRng::derive(seed, 0x5245504cull), rep));
}

//---------------------------------------------------------------------------//
/*!
 * Evaluate f(stream, rep) for rep = 0..reps-1, each with its own stream
 * derived from (seed, rep). Results are stored by replication index, so the
 * output does not depend on the number of threads.
 */
template<class T, class F>
std::vector<T> replicate(std::size_t reps, std::uint64_t seed, F&& f, unsigned threads = 1) {
    std::vector<T> out(reps);
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            CounterRng rng = replication_stream(seed, r);
            out[r] = f(rng, r);
        }
    };
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, reps));
    if (workers == 1) {
        run(0, reps);
        return out;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (reps + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(reps, begin + chunk);
        if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool) t.join();
    return out;
}

template<class F>
Estimate mc_estimate(F&& generator, std::size_t reps, std::uint64_t seed,
                     std::optional<double> target = std::nullopt, unsigned threads = 1) {
    auto samples = replicate<double>(reps, seed, std::forward<F>(generator), threads);
    return make_estimate(samples, target);
}

//! Kolmogorov-Smirnov two-sample statistic sup |F_a - F_b|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

//! Asymptotic two-sample KS critical value c(alpha) sqrt((n+m)/(nm)),
//! with c = 1.63 at the 1% level.
double ks_critical_value(std::size_t n, std::size_t m, double c_alpha = 1.63);

}  // namespace rrt
