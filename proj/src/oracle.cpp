#include "rrt/oracle.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

#include "rrt/functionals.hpp"

namespace rrt {

namespace {
void check_range(std::size_t n) {
    if (n < kOracleMinN || n > kOracleMaxN) {
        throw std::out_of_range("oracle enumeration supports " + std::to_string(kOracleMinN)
                                + " <= n <= " + std::to_string(kOracleMaxN) + ", got "
                                + std::to_string(n));
    }
}

std::int64_t evaluate(Functional f, const HarrisTree& x) {
    switch (f) {
        case Functional::tpl: return tpl(x);
        case Functional::hpl: return hpl(x);
        case Functional::wiener: return wiener_subtree(x);
        case Functional::tpl_plus_hpl: return tpl(x) + hpl(x);
    }
    return 0;
}

// Run body(shard, shard_count) on up to `threads` threads and return the
// per-shard results in shard order.
template<class Result, class Body>
std::vector<Result> sharded(std::size_t n, unsigned threads, Body body) {
    std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(threads, n - 1));
    std::vector<Result> results(shards);
    if (shards == 1) {
        results[0] = body(0, 1);
        return results;
    }
    std::vector<std::thread> pool;
    for (std::size_t s = 0; s < shards; ++s) {
        pool.emplace_back([&, s] { results[s] = body(s, shards); });
    }
    for (auto& t : pool) t.join();
    return results;
}
}  // namespace

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

EncodingEnumerator::EncodingEnumerator(std::size_t n) {
    check_range(n);
    current_.assign(n - 1, 1);
}

bool EncodingEnumerator::next() {
    for (std::size_t k = current_.size(); k-- > 0;) {
        if (current_[k] < k + 1) {
            ++current_[k];
            return true;
        }
        current_[k] = 1;
    }
    return false;
}

void for_each_encoding(std::size_t n, const std::function<void(const Encoding&)>& f,
                       std::size_t shard, std::size_t shard_count) {
    check_range(n);
    if (shard_count == 0 || shard >= shard_count) {
        throw std::invalid_argument("for_each_encoding: bad shard index");
    }
    EncodingEnumerator it(n);
    do {
        if ((it.current().back() - 1) % shard_count == shard) f(it.current());
    } while (it.next());
}

std::string to_string(Functional f) {
    switch (f) {
        case Functional::tpl: return "tpl";
        case Functional::hpl: return "hpl";
        case Functional::wiener: return "wiener";
        case Functional::tpl_plus_hpl: return "tpl+hpl";
    }
    return "?";
}

Functional parse_functional(const std::string& name) {
    for (auto f : {Functional::tpl, Functional::hpl, Functional::wiener, Functional::tpl_plus_hpl}) {
        if (to_string(f) == name) return f;
    }
    if (name == "comparisons") return Functional::tpl_plus_hpl;
    throw std::invalid_argument("unknown functional '" + name + "'");
}

Rational ExactDist::weight(std::int64_t value) const {
    auto it = counts.find(value);
    std::uint64_t c = it == counts.end() ? 0 : it->second;
    return {static_cast<Int128>(c), static_cast<Int128>(total())};
}

Rational ExactDist::mean() const {
    Int128 sum = 0;
    for (auto [value, count] : counts) sum += static_cast<Int128>(value) * count;
    return {sum, static_cast<Int128>(total())};
}

ExactDist ExactDist::shifted(std::int64_t offset) const {
    ExactDist out{n, {}};
    for (auto [value, count] : counts) out.counts[value + offset] = count;
    return out;
}

ExactDist exact_dist(Functional f, std::size_t n, unsigned threads) {
    check_range(n);
    using Counts = std::map<std::int64_t, std::uint64_t>;
    auto parts = sharded<Counts>(n, threads, [&](std::size_t shard, std::size_t count) {
        Counts local;
        for_each_encoding(
            n, [&](const Encoding& e) { ++local[evaluate(f, psi(e))]; }, shard, count);
        return local;
    });
    ExactDist dist{n, {}};
    for (const auto& part : parts) {
        for (auto [value, c] : part) dist.counts[value] += c;
    }
    return dist;
}

JointTable joint_table(std::size_t n, unsigned threads) {
    check_range(n);
    auto parts = sharded<JointTable>(n, threads, [&](std::size_t shard, std::size_t count) {
        JointTable local;
        for_each_encoding(
            n,
            [&](const Encoding& e) {
                HarrisTree x = psi(e);
                ++local[{tpl(x), hpl(x)}];
            },
            shard, count);
        return local;
    });
    JointTable table;
    for (const auto& part : parts) {
        for (const auto& [key, c] : part) table[key] += c;
    }
    return table;
}

std::map<std::string, std::uint64_t> tree_law(std::size_t n) {
    if (n == 1) return {{HarrisTree().to_json(), 1}};
    std::map<std::string, std::uint64_t> law;
    for_each_encoding(n, [&](const Encoding& e) { ++law[psi(e).to_json()]; });
    return law;
}

bool DecompositionLaw::k_uniform() const {
    if (k_counts.size() != n - 1) return false;
    std::uint64_t expected = factorial(n - 1) / (n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        auto it = k_counts.find(k);
        if (it == k_counts.end() || it->second != expected) return false;
    }
    return true;
}

bool DecompositionLaw::factorizes() const {
    // c(k,f,s) / (n-1)! == 1/(n-1) * law_k(f)/(k-1)! * law_{n-k}(s)/(n-k-1)!
    // over the full product of supports, so absent triples must have zero
    // predicted probability as well.
    Int128 total = factorial(n - 1);
    std::size_t matched = 0;
    for (std::size_t k = 1; k < n; ++k) {
        auto flat_law = tree_law(k);
        auto sharp_law = tree_law(n - k);
        for (const auto& [f, cf] : flat_law) {
            for (const auto& [s, cs] : sharp_law) {
                auto it = joint.find({k, f, s});
                Int128 c = it == joint.end() ? 0 : static_cast<Int128>(it->second);
                if (it != joint.end()) ++matched;
                Int128 lhs = c * static_cast<Int128>(n - 1) * factorial(k - 1) * factorial(n - k - 1);
                Int128 rhs = total * static_cast<Int128>(cf) * static_cast<Int128>(cs);
                if (lhs != rhs) return false;
            }
        }
    }
    return matched == joint.size();
}

DecompositionLaw decomposition_law(std::size_t n) {
    if (n < 2 || n > 7) {
        throw std::out_of_range("decomposition_law supports 2 <= n <= 7");
    }
    DecompositionLaw law;
    law.n = n;
    for_each_encoding(n, [&](const Encoding& e) {
        Decomposition d = decompose(psi(e));
        ++law.joint[{d.k, d.flat.to_json(), d.sharp.to_json()}];
        ++law.k_counts[d.k];
    });
    return law;
}

std::vector<std::pair<HarrisTree, std::uint64_t>> harris_trees(std::size_t n) {
    if (n == 1) return {{HarrisTree(), 1}};
    std::map<std::string, std::pair<HarrisTree, std::uint64_t>> seen;
    for_each_encoding(n, [&](const Encoding& e) {
        HarrisTree x = psi(e);
        auto [it, fresh] = seen.try_emplace(x.to_json(), x, 0);
        ++it->second.second;
    });
    std::vector<std::pair<HarrisTree, std::uint64_t>> out;
    out.reserve(seen.size());
    for (auto& [key, entry] : seen) out.push_back(std::move(entry));
    return out;
}

}  // namespace rrt
