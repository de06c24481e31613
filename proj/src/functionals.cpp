#include "rrt/functionals.hpp"

#include <stdexcept>

namespace rrt {

std::int64_t tpl(const HarrisTree& x) {
    std::int64_t total = 0;
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) total += x.depth(id);
    return total;
}

std::int64_t hpl(const HarrisTree& x) {
    std::int64_t total = 0;
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        total += static_cast<std::int64_t>(x.weight(id)) - x.depth(id);
    }
    return total;
}

std::int64_t subtree_size_square_sum(const HarrisTree& x) {
    std::int64_t total = 0;
    for (auto s : x.subtree_sizes()) total += std::int64_t{s} * s;
    return total;
}

std::int64_t wiener_pairwise(const HarrisTree& x) {
    std::size_t n = x.size();
    if (n > kWienerPairwiseLimit) {
        throw std::invalid_argument("wiener_pairwise is limited to trees with at most "
                                    + std::to_string(kWienerPairwiseLimit) + " nodes");
    }
    auto words = x.words();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto common = depth(meet(words[i], words[j]));
            total += static_cast<std::int64_t>(depth(words[i]) + depth(words[j]) - 2 * common);
        }
    }
    return total / 2;
}

std::int64_t wiener_subtree(const HarrisTree& x) {
    auto n = static_cast<std::int64_t>(x.size());
    return n * tpl(x) + n * n - subtree_size_square_sum(x);
}

Rational harmonic_exact(std::uint64_t n, HarmonicZero h0) {
    if (n == 0) return h0 == HarmonicZero::one ? Rational(1) : Rational(0);
    if (n > 30) {
        throw std::invalid_argument("harmonic_exact is limited to n <= 30");
    }
    Rational h(0);
    for (std::uint64_t k = 1; k <= n; ++k) h += Rational(1, static_cast<Int128>(k));
    return h;
}

double harmonic(std::uint64_t n, HarmonicZero h0) {
    if (n == 0) return h0 == HarmonicZero::one ? 1.0 : 0.0;
    // Sum smallest terms first.
    double h = 0.0;
    for (std::uint64_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    return h;
}

FunctionalRecord functional_record(const HarrisTree& x) {
    FunctionalRecord r;
    r.n = x.size();
    r.tpl = tpl(x);
    r.hpl = hpl(x);
    r.wiener = wiener_subtree(x);
    r.comparisons = r.tpl + r.hpl;
    return r;
}

std::string to_csv_row(const FunctionalRecord& r) {
    return std::to_string(r.n) + "," + std::to_string(r.tpl) + "," + std::to_string(r.hpl) + ","
           + std::to_string(r.wiener) + "," + std::to_string(r.comparisons);
}

}  // namespace rrt
