#include "rrt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace rrt {

bool Estimate::within(double bands) const {
    if (!target) return true;
    if (std_error == 0.0) return mean == *target;
    return std::abs(*z_score) < bands;
}

std::string Estimate::str() const {
    char buf[160];
    if (target) {
        std::snprintf(buf, sizeof buf, "mean=%.6g se=%.3g target=%.6g z=%+.2f (reps=%zu)", mean,
                      std_error, *target, z_score.value_or(0.0), reps);
    } else {
        std::snprintf(buf, sizeof buf, "mean=%.6g se=%.3g (reps=%zu)", mean, std_error, reps);
    }
    return buf;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Estimate make_estimate(std::span<const double> samples, std::optional<double> target) {
    if (samples.empty()) {
        throw std::invalid_argument("make_estimate: no samples");
    }
    Estimate e;
    e.reps = samples.size();
    auto n = static_cast<double>(samples.size());
    e.mean = pairwise_sum(samples) / n;
    if (samples.size() > 1) {
        std::vector<double> sq(samples.size());
        std::transform(samples.begin(), samples.end(), sq.begin(),
                       [&](double v) { return (v - e.mean) * (v - e.mean); });
        e.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
    }
    e.target = target;
    if (target) {
        if (e.std_error > 0.0) {
            e.z_score = (e.mean - *target) / e.std_error;
        } else {
            e.z_score = e.mean == *target ? 0.0 : std::numeric_limits<double>::infinity();
        }
    }
    return e;
}

unsigned default_threads() {
    if (const char* env = std::getenv("RRT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_two_sample: both samples must be non-empty");
    }
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    auto nx = static_cast<double>(x.size());
    auto ny = static_cast<double>(y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    return d;
}

double ks_critical_value(std::size_t n, std::size_t m, double c_alpha) {
    auto dn = static_cast<double>(n);
    auto dm = static_cast<double>(m);
    return c_alpha * std::sqrt((dn + dm) / (dn * dm));
}

}  // namespace rrt
