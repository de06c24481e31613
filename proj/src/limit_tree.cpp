#include "rrt/limit_tree.hpp"

#include <cmath>
#include <stdexcept>

#include "rrt/functionals.hpp"

namespace rrt {

LimitTree::LimitTree(LimitMode mode, std::uint64_t key, std::size_t stick_cut)
    : mode_(mode), root_key_(CounterRng::derive(key, 0)), stick_cut_(stick_cut) {
    if (stick_cut_ < 1) {
        throw std::invalid_argument("stick_cut must be at least 1");
    }
}

LimitTree LimitTree::unconditional(std::uint64_t key, std::size_t stick_cut) {
    return LimitTree(LimitMode::unconditional, key, stick_cut);
}

LimitTree LimitTree::conditional(const HarrisTree& x, std::uint64_t key, std::size_t stick_cut) {
    LimitTree L(LimitMode::conditional, key, stick_cut);
    L.tree_ = x;
    auto sizes = x.subtree_sizes();
    L.params_.reserve(x.size());
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        std::vector<std::uint32_t> a;
        for (auto c : x.children(id)) a.push_back(sizes[c]);
        if (a.size() > stick_cut) {
            throw std::invalid_argument("conditioning tree has more children than stick_cut");
        }
        L.params_.emplace_back(std::move(a));
    }
    return L;
}

LimitTree LimitTree::from_input(const RtTrace& trace, std::uint64_t key, std::size_t stick_cut) {
    LimitTree L(LimitMode::from_input, key, stick_cut);
    const HarrisTree& x = trace.tree();
    L.tree_ = x;
    L.observed_.resize(x.size());
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        // Children carry decreasing labels inside the node's interval; each
        // one cuts a stick off the part of the interval still unclaimed.
        double lo = trace.record(id).label;
        double prev = trace.record(id).upper;
        for (auto c : x.children(id)) {
            double label = trace.record(c).label;
            L.observed_[id].push_back((prev - label) / (prev - lo));
            prev = label;
        }
    }
    return L;
}

LimitTree::Site LimitTree::child_site(const Site& s, Letter i) const {
    Site c{CounterRng::derive(s.key, i), HarrisTree::npos};
    if (mode_ != LimitMode::unconditional && s.node != HarrisTree::npos) {
        auto ch = tree_.children(s.node);
        if (i <= ch.size()) c.node = ch[i - 1];
    }
    return c;
}

LimitTree::Site LimitTree::site_of(const Word& u) const {
    Site s = root_site();
    for (Letter l : u.letters()) s = child_site(s, l);
    return s;
}

double LimitTree::stick(const Site& s, std::size_t i) const {
    bool known = s.node != HarrisTree::npos;
    switch (mode_) {
        case LimitMode::unconditional:
            break;
        case LimitMode::conditional:
            if (known) {
                auto [alpha, beta] = params_[s.node].stick_law(i);
                if (alpha == 1 && beta == 1) break;
                std::uint64_t j = 0;
                return beta_from_uniforms(alpha, beta, [&] {
                    return CounterRng::uniform_at(s.key, i, j++);
                });
            }
            break;
        case LimitMode::from_input:
            if (known && i <= observed_[s.node].size()) return observed_[s.node][i - 1];
            break;
    }
    return CounterRng::uniform_at(s.key, i, 0);
}

double LimitTree::stick(const Word& u, std::size_t i) const {
    if (i == 0) {
        throw std::invalid_argument("stick indices start at 1");
    }
    return stick(site_of(u), i);
}

GemParams LimitTree::params(const Word& u) const {
    if (mode_ == LimitMode::conditional) {
        auto id = tree_.find(u);
        if (id != HarrisTree::npos) return params_[id];
    }
    return {};
}

SimplexVec LimitTree::materialize(const Word& u) const {
    Site s = site_of(u);
    std::vector<double> z(stick_cut_);
    for (std::size_t i = 1; i <= stick_cut_; ++i) z[i - 1] = stick(s, i);
    return stick_to_simplex(z);
}

const SimplexVec& LimitTree::rho(const Word& u) {
    auto it = store_.find(u);
    if (it != store_.end()) return it->second;
    if (frozen_) {
        throw std::logic_error("LimitTree is frozen; " + to_string(u) + " was never materialized");
    }
    return store_.emplace(u, materialize(u)).first->second;
}

double LimitTree::mass(const Word& u) const {
    double m = 1.0;
    Site s = root_site();
    for (Letter l : u.letters()) {
        if (l > stick_cut_) return 0.0;
        for (std::size_t i = 1; i < l; ++i) m *= 1.0 - stick(s, i);
        m *= stick(s, l);
        s = child_site(s, l);
    }
    return m;
}

void LimitTree::visit(const Site& s, std::uint64_t weight, double mass,
                      const SeriesOptions& options, SeriesValues& acc) const {
    double remaining = mass;
    for (std::size_t i = 1; i <= stick_cut_; ++i) {
        if (remaining < options.mass_floor || remaining <= 0.0) break;
        double z = stick(s, i);
        acc.y += remaining * (z + z * std::log(z) + (1.0 - z) * std::log1p(-z));
        acc.z += remaining * (1.0 - 2.0 * z);
        double child_mass = remaining * z;
        if (weight + i <= options.weight_cut) {
            acc.w += child_mass * child_mass;
            visit(child_site(s, static_cast<Letter>(i)), weight + i, child_mass, options, acc);
        }
        remaining *= 1.0 - z;
    }
}

SeriesValues LimitTree::series(const SeriesOptions& options) const {
    SeriesValues acc;
    acc.w = 1.0;
    visit(root_site(), 0, 1.0, options, acc);
    return acc;
}

SeriesValues LimitTree::series_direct(std::uint64_t weight_cut) const {
    SeriesValues acc;
    for (std::uint64_t w = 0; w <= weight_cut; ++w) {
        for (const Word& u : words_of_weight(w)) {
            double m = mass(u);
            if (m == 0.0) continue;
            SimplexVec s = materialize(u);
            acc.y += m * toll_c(s);
            acc.z += m * toll_d(s);
            acc.w += m * m;
        }
    }
    return acc;
}

double y_projection(const HarrisTree& x) {
    auto n = static_cast<double>(x.size());
    return static_cast<double>(tpl(x)) / n + 1.0 - harmonic(x.size());
}

double z_projection(const HarrisTree& x) {
    auto n = static_cast<double>(x.size());
    return (static_cast<double>(hpl(x)) - static_cast<double>(tpl(x)) + n - 1.0) / n;
}

double w_projection(const HarrisTree& x) {
    auto n = static_cast<double>(x.size());
    double internal = n + static_cast<double>(tpl(x)) + static_cast<double>(subtree_size_square_sum(x));
    return internal / (n * (n + 1.0)) + 2.0 / (n + 1.0);
}

double fixed_point_rhs(double y1, double y2, double u) {
    return u * y1 + (1.0 - u) * y2 + g_toll(u);
}

double fixed_point_rhs_tilde(double y1, double y2, double u) {
    return u * y1 + (1.0 - u) * y2 + g_tilde(u);
}

}  // namespace rrt
