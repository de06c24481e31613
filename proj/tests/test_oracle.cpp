#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rrt/functionals.hpp"
#include "rrt/oracle.hpp"

using namespace rrt;

namespace {

// Recursive tree straight from the encoding: node k+1 hangs below j_k and
// gets the next letter at that parent.
struct NaiveTree {
    std::vector<std::size_t> parent{0};
    std::vector<std::int64_t> depth{0};
    std::vector<std::int64_t> horizontal{0};

    explicit NaiveTree(const Encoding& e) {
        std::vector<std::int64_t> kids(e.size() + 1, 0);
        for (auto j : e) {
            std::size_t p = j - 1;
            parent.push_back(p);
            depth.push_back(depth[p] + 1);
            horizontal.push_back(horizontal[p] + kids[p]);
            ++kids[p];
        }
    }
    std::int64_t tpl() const { return std::accumulate(depth.begin(), depth.end(), std::int64_t{0}); }
    std::int64_t hpl() const {
        return std::accumulate(horizontal.begin(), horizontal.end(), std::int64_t{0});
    }
    std::int64_t wiener() const {
        std::int64_t sum = 0;
        for (std::size_t a = 0; a < parent.size(); ++a) {
            for (std::size_t b = a + 1; b < parent.size(); ++b) {
                std::size_t x = a, y = b;
                std::int64_t d = 0;
                while (x != y) {
                    if (depth[x] >= depth[y]) x = parent[x]; else y = parent[y];
                    ++d;
                }
                sum += d;
            }
        }
        return sum;
    }
};

std::map<std::int64_t, std::uint64_t> naive_counts(std::size_t n, Functional f) {
    std::map<std::int64_t, std::uint64_t> counts;
    EncodingEnumerator it(n);
    do {
        NaiveTree t(it.current());
        switch (f) {
            case Functional::tpl: ++counts[t.tpl()]; break;
            case Functional::hpl: ++counts[t.hpl()]; break;
            case Functional::wiener: ++counts[t.wiener()]; break;
            case Functional::tpl_plus_hpl: ++counts[t.tpl() + t.hpl()]; break;
        }
    } while (it.next());
    return counts;
}

Rational harmonic_q(std::int64_t n) {
    Rational s(0);
    for (std::int64_t k = 1; k <= n; ++k) s += Rational(1, k);
    return s;
}

}  // namespace

TEST_CASE("encodings are enumerated once each in lexicographic order") {
    for (std::size_t n = 2; n <= 8; ++n) {
        EncodingEnumerator it(n);
        std::uint64_t count = 0;
        Encoding prev;
        do {
            CHECK(is_valid_encoding(it.current()));
            CHECK(it.current().size() == n - 1);
            if (count > 0) CHECK(prev < it.current());
            prev = it.current();
            ++count;
        } while (it.next());
        CHECK(count == factorial(n - 1));
    }
    CHECK(factorial(7) == 5040);
    CHECK(factorial(0) == 1);
}

TEST_CASE("shards partition the encodings") {
    for (std::size_t shards : {1u, 2u, 3u, 5u}) {
        std::set<Encoding> seen;
        std::uint64_t total = 0;
        for (std::size_t s = 0; s < shards; ++s) {
            for_each_encoding(6, [&](const Encoding& e) { seen.insert(e); ++total; }, s, shards);
        }
        CHECK(total == 120);
        CHECK(seen.size() == 120);
    }
}

TEST_CASE("exact laws against the naive tree") {
    CHECK(exact_dist(Functional::tpl, 2).counts == std::map<std::int64_t, std::uint64_t>{{1, 1}});
    auto t3 = exact_dist(Functional::tpl, 3);
    CHECK(t3.weight(2) == Rational(1, 2));
    CHECK(t3.weight(3) == Rational(1, 2));
    CHECK(t3.weight(4) == Rational(0));
    for (std::size_t n = 2; n <= 7; ++n) {
        for (auto f : {Functional::tpl, Functional::hpl, Functional::wiener, Functional::tpl_plus_hpl}) {
            CHECK_MESSAGE(exact_dist(f, n).counts == naive_counts(n, f), to_string(f) << " n=" << n);
        }
    }
    CHECK(exact_dist(Functional::wiener, 7).mean() == Rational(56) * harmonic_q(7) - Rational(98));
    for (std::int64_t n = 2; n <= 8; ++n) {
        CHECK(exact_dist(Functional::tpl, n).mean() == Rational(n) * harmonic_q(n) - Rational(n));
    }
}

TEST_CASE("range and name errors") {
    CHECK_THROWS_AS(exact_dist(Functional::tpl, 1), std::out_of_range);
    CHECK_THROWS_AS(exact_dist(Functional::tpl, kOracleMaxN + 1), std::out_of_range);
    CHECK_THROWS_AS(joint_table(kOracleMaxN + 1), std::out_of_range);
    CHECK_THROWS_AS(parse_functional("depth"), std::invalid_argument);
    CHECK(parse_functional("comparisons") == Functional::tpl_plus_hpl);
    for (auto f : {Functional::tpl, Functional::hpl, Functional::wiener, Functional::tpl_plus_hpl}) {
        CHECK(parse_functional(to_string(f)) == f);
    }
}

TEST_CASE("joint table") {
    CHECK(joint_table(2) == JointTable{{{1, 0}, 1}});
    for (std::int64_t n = 3; n <= 7; ++n) {
        JointTable table = joint_table(n);
        std::uint64_t total = 0;
        std::map<std::int64_t, std::uint64_t> tpl_marginal;
        for (auto [key, count] : table) {
            total += count;
            tpl_marginal[key.first] += count;
            // The horizontal/vertical swap maps (t, h) to (h + n - 1, t - n + 1).
            auto mirror = table.find({key.second + n - 1, key.first - n + 1});
            REQUIRE(mirror != table.end());
            CHECK(mirror->second == count);
        }
        CHECK(total == factorial(n - 1));
        CHECK(tpl_marginal == exact_dist(Functional::tpl, n).counts);
    }
    std::uint64_t total = 0;
    for (auto [key, count] : joint_table(7)) total += count;
    CHECK(total == 720);
}

TEST_CASE("shifted total path length has the law of the horizontal one") {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto shifted = exact_dist(Functional::tpl, n).shifted(-static_cast<std::int64_t>(n - 1));
        CHECK(shifted == exact_dist(Functional::hpl, n));
    }
}

TEST_CASE("the swap map preserves the law") {
    for (std::size_t n = 2; n <= 7; ++n) {
        auto law = tree_law(n);
        std::map<std::string, std::uint64_t> image;
        for (const auto& [x, count] : harris_trees(n)) image[t_tree(x).to_json()] += count;
        CHECK(image == law);
    }
}

TEST_CASE("distinct trees") {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (std::size_t n = 2; n <= 7; ++n) {
        auto trees = harris_trees(n);
        CHECK(trees.size() == catalan[n - 1]);
        std::uint64_t total = 0;
        for (const auto& [x, count] : trees) {
            CHECK(x.size() == n);
            CHECK(tree_law(n).at(x.to_json()) == count);
            total += count;
        }
        CHECK(total == factorial(n - 1));
    }
    CHECK(harris_trees(1).size() == 1);
}

TEST_CASE("decomposition law") {
    auto two = decomposition_law(2);
    CHECK(two.k_counts == std::map<std::size_t, std::uint64_t>{{1, 1}});
    CHECK(two.k_uniform());
    for (std::size_t n : {4u, 5u}) {
        auto law = decomposition_law(n);
        CHECK(law.k_uniform());
        CHECK(law.factorizes());
    }
    // Given K = 3 at n = 5, the flat part has the law of X_3.
    auto five = decomposition_law(5);
    std::map<std::string, std::uint64_t> flat;
    for (const auto& [key, count] : five.joint) {
        if (std::get<0>(key) == 3) flat[std::get<1>(key)] += count;
    }
    auto three = tree_law(3);
    REQUIRE(flat.size() == three.size());
    std::uint64_t k3 = five.k_counts.at(3);
    for (const auto& [tree, count] : three) {
        CHECK(Rational(flat.at(tree), k3) == Rational(count, 2));
    }
}

TEST_CASE("results do not depend on the thread count") {
    for (unsigned threads : {2u, 3u, 7u}) {
        CHECK(exact_dist(Functional::wiener, 7, threads) == exact_dist(Functional::wiener, 7, 1));
        CHECK(joint_table(7, threads) == joint_table(7, 1));
    }
}
