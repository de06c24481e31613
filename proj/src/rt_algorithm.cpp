#include "rrt/rt_algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rrt {

namespace {
void check_open_unit(double value, std::size_t index) {
    if (!(value > 0.0 && value < 1.0)) {
        throw InputError("input " + std::to_string(index) + " = " + std::to_string(value)
                         + " is outside (0,1)");
    }
}
}  // namespace

RtTrace::RtTrace() : records_(1), sorted_{{0.0, 0, 0}} {}

void RtTrace::push(double value) {
    std::size_t index = records_.size();
    check_open_unit(value, index);

    std::size_t lo = 0;
    std::size_t hi = sorted_.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        ++search_;
        if (sorted_[mid].label < value) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < sorted_.size() && sorted_[lo].label == value) {
        throw InputError("inputs " + std::to_string(sorted_[lo].input_index) + " and "
                         + std::to_string(index) + " are equal");
    }
    // lo >= 1 because the root label 0 is below every admissible input.
    HarrisTree::NodeId id = tree_.grow(sorted_[lo - 1].node);
    RtRecord rec;
    rec.tau = index;
    rec.kappa = lo;
    rec.label = value;
    rec.upper = lo < sorted_.size() ? sorted_[lo].label : 1.0;
    records_.push_back(rec);
    sorted_.insert(sorted_.begin() + static_cast<std::ptrdiff_t>(lo), Slot{value, id, index});
    structural_ += tree_.weight(id);
}

const RtRecord& RtTrace::record(const Word& u) const {
    auto id = tree_.find(u);
    if (id == HarrisTree::npos) {
        throw InputError("node " + to_string(u) + " has not been inserted");
    }
    return records_[id];
}

std::vector<double> RtTrace::order_stats() const {
    std::vector<double> out;
    out.reserve(sorted_.size() - 1);
    for (std::size_t i = 1; i < sorted_.size(); ++i) out.push_back(sorted_[i].label);
    return out;
}

RtTrace rt_build(std::span<const double> t, std::size_t n) {
    if (n < 1) {
        throw InputError("rt_build: n must be positive");
    }
    if (t.size() < n - 1) {
        throw InputError("rt_build: need " + std::to_string(n - 1) + " inputs, got "
                         + std::to_string(t.size()));
    }
    RtTrace trace;
    for (std::size_t i = 0; i + 1 < n; ++i) trace.push(t[i]);
    return trace;
}

double limit_mass(const RtTrace& trace, const Word& u) {
    if (u.empty()) return 1.0;
    const RtRecord& rec = trace.record(u);
    return rec.upper - rec.label;
}

Rational empirical_mass(std::span<const double> t, const Word& u, std::size_t n) {
    RtTrace trace = rt_build(t, n);
    std::size_t count = trace.tree().subtree_size(u);
    if (count == 0) {
        throw InputError("node " + to_string(u) + " has not been inserted by step "
                         + std::to_string(n));
    }
    return {static_cast<Int128>(count), static_cast<Int128>(n)};
}

SplitInput split_input(std::span<const double> t) {
    if (t.empty()) {
        throw InputError("split_input: empty input");
    }
    for (std::size_t i = 0; i < t.size(); ++i) check_open_unit(t[i], i + 1);
    std::vector<std::pair<double, std::size_t>> sorted;
    sorted.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) sorted.emplace_back(t[i], i + 1);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i - 1].first) {
            throw InputError("inputs " + std::to_string(std::min(sorted[i].second, sorted[i - 1].second))
                             + " and " + std::to_string(std::max(sorted[i].second, sorted[i - 1].second))
                             + " are equal");
        }
    }
    SplitInput out{t[0], {}, {}};
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] > out.eta1) {
            out.flat.push_back((t[i] - out.eta1) / (1.0 - out.eta1));
        } else {
            out.sharp.push_back(t[i] / out.eta1);
        }
    }
    return out;
}

}  // namespace rrt
