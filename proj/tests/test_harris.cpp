#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "rrt/harris_tree.hpp"
#include "rrt/oracle.hpp"

using namespace rrt;
using WordSet = std::set<Word>;

namespace {

HarrisTree tree(std::initializer_list<Word> words) {
    std::vector<Word> w(words);
    return HarrisTree::from_words(w);
}

WordSet word_set(const HarrisTree& x) {
    auto w = x.words();
    return {w.begin(), w.end()};
}

// Node k+1 hangs below node e[k-1]; its last letter counts the children of
// that parent so far.
WordSet psi_oracle(const std::vector<std::uint32_t>& e) {
    std::vector<Word> node{Word{}};
    std::map<std::uint32_t, Letter> children;
    for (auto parent : e) {
        Letter i = ++children[parent];
        node.push_back(node[parent - 1].child(i));
    }
    return {node.begin(), node.end()};
}

std::size_t size_oracle(const WordSet& x, const Word& u) {
    std::size_t n = 0;
    for (const auto& v : x) n += u.is_prefix_of(v);
    return n;
}

std::multiset<std::string> keys(const std::vector<HarrisTree>& trees) {
    std::multiset<std::string> out;
    for (const auto& t : trees) out.insert(t.to_json());
    return out;
}

}  // namespace

TEST_CASE("validate") {
    std::vector<Word> ok{Word{}, Word{1}, Word{2}};
    CHECK_FALSE(validate(ok).has_value());

    std::vector<Word> gap{Word{}, Word{2}};
    auto e = validate(gap);
    REQUIRE(e.has_value());
    CHECK(e->property == HarrisProperty::sibling_closed);
    CHECK(e->node == Word{2});

    std::vector<Word> rootless{Word{1}};
    e = validate(rootless);
    REQUIRE(e.has_value());
    CHECK(e->property == HarrisProperty::prefix_closed);

    std::vector<Word> none;
    e = validate(none);
    REQUIRE(e.has_value());
    CHECK(e->property == HarrisProperty::empty);

    CHECK_THROWS_AS(HarrisTree::from_words(gap), InvalidTree);
}

TEST_CASE("subtree sizes") {
    HarrisTree x = tree({Word{}, Word{1}, Word{1, 1}});
    CHECK(x.subtree_size(Word{1}) == 2);
    CHECK(tree({Word{}, Word{1}, Word{2}}).subtree_size(Word{3}) == 0);
    CHECK(x.subtree_size(Word{}) == 3);

    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& [t, count] : harris_trees(n)) {
            WordSet ws = word_set(t);
            for (const auto& u : ws) {
                std::size_t expected = 1;
                for (Letter i = 1; i <= t.child_count(u); ++i) expected += t.subtree_size(u.child(i));
                REQUIRE(t.subtree_size(u) == expected);
                REQUIRE(t.subtree_size(u) == size_oracle(ws, u));
            }
        }
    }
}

TEST_CASE("insert_child returns a new tree") {
    HarrisTree root;
    HarrisTree one = root.insert_child(Word{});
    CHECK(word_set(one) == WordSet{Word{}, Word{1}});
    CHECK(root.size() == 1);
    CHECK(word_set(one.insert_child(Word{})) == WordSet{Word{}, Word{1}, Word{2}});
    CHECK(word_set(one.insert_child(Word{1})) == WordSet{Word{}, Word{1}, Word{1, 1}});
    CHECK_THROWS_AS(one.insert_child(Word{2}), std::invalid_argument);
}

TEST_CASE("successors") {
    CHECK(successors(HarrisTree()).size() == 1);
    CHECK(successors(tree({Word{}, Word{1}})).size() == 2);
    for (const auto& [x, count] : harris_trees(4)) {
        auto next = successors(x);
        CHECK(next.size() == 4);
        CHECK(keys(next).size() == 4);
        for (const auto& y : next) CHECK(y.size() == 5);
    }
}

TEST_CASE("psi against the set oracle") {
    CHECK(word_set(psi(Encoding{1})) == WordSet{Word{}, Word{1}});
    CHECK(psi(Encoding{1, 1, 2}) == psi(Encoding{1, 2, 1}));
    for (std::size_t n = 2; n <= 7; ++n) {
        std::set<std::string> image;
        for_each_encoding(n, [&](const Encoding& e) {
            HarrisTree x = psi(e);
            REQUIRE(word_set(x) == psi_oracle(e));
            image.insert(x.to_json());
        });
        // Surjective onto the trees of size n, whose number is Catalan(n-1).
        static const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
        CHECK(image.size() == catalan[n - 1]);
    }
    CHECK(harris_trees(4).size() == 5);
    CHECK_THROWS_AS(psi(Encoding{1, 3}), std::invalid_argument);
}

TEST_CASE("decompose") {
    auto d = decompose(tree({Word{}, Word{1}, Word{2}}));
    CHECK(d.k == 1);
    CHECK(word_set(d.flat) == WordSet{Word{}});
    CHECK(word_set(d.sharp) == WordSet{Word{}, Word{1}});

    d = decompose(tree({Word{}, Word{1}, Word{1, 1}}));
    CHECK(d.k == 2);
    CHECK(word_set(d.flat) == WordSet{Word{}, Word{1}});
    CHECK(word_set(d.sharp) == WordSet{Word{}});

    CHECK_THROWS_AS(decompose(HarrisTree()), std::invalid_argument);

    // Rebuilding from the parts gives back the tree.
    for (const auto& [x, count] : harris_trees(6)) {
        auto p = decompose(x);
        WordSet rebuilt{Word{}};
        for (const auto& u : p.flat.words()) rebuilt.insert(flat_word(u));
        for (const auto& u : p.sharp.words()) {
            if (!u.empty()) rebuilt.insert(sharp_word(u));
        }
        CHECK(rebuilt == word_set(x));
        CHECK(p.flat.size() + p.sharp.size() == x.size());
    }

    // Law of K over the 3! encodings with four nodes.
    std::map<std::size_t, int> k;
    for_each_encoding(4, [&](const Encoding& e) { ++k[decompose(psi(e)).k]; });
    CHECK(k == std::map<std::size_t, int>{{1, 2}, {2, 2}, {3, 2}});
}

TEST_CASE("t_tree") {
    CHECK(word_set(t_tree(tree({Word{}, Word{1}, Word{1, 1}}))) == WordSet{Word{}, Word{1}, Word{2}});
    CHECK(t_tree(HarrisTree()) == HarrisTree());
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& [x, count] : harris_trees(n)) {
            HarrisTree tx = t_tree(x);
            auto ws = tx.words();
            REQUIRE_FALSE(validate(ws).has_value());
            REQUIRE(tx.size() == x.size());
            REQUIRE(t_tree(tx) == x);
        }
    }
}

TEST_CASE("t_tree is compatible with growth") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& [x, count] : harris_trees(n)) {
            std::vector<HarrisTree> mapped;
            for (const auto& y : successors(x)) mapped.push_back(t_tree(y));
            REQUIRE(keys(successors(t_tree(x))) == keys(mapped));
        }
    }
}

TEST_CASE("canonical serialization") {
    HarrisTree x = tree({Word{}, Word{2}, Word{1}, Word{1, 1}});
    CHECK(x.to_json() == R"j(["()","(1)","(2)","(1,1)"])j");
    CHECK(x.shape_key() == tree({Word{}, Word{1}, Word{1, 1}, Word{2}}).shape_key());
}

TEST_CASE("grow_chain") {
    CounterRng rng(42);
    CHECK(grow_chain(1, rng) == HarrisTree());
    CHECK(word_set(grow_chain(2, rng)) == WordSet{Word{}, Word{1}});

    std::vector<HarrisTree> path;
    HarrisTree x = grow_chain(6, rng, &path);
    REQUIRE(path.size() == 6);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(path[i].size() == i + 1);
        auto next = keys(successors(path[i]));
        CHECK(next.count(path[i + 1].to_json()) == 1);
    }
    CHECK(path.back() == x);
}

TEST_CASE("grow_chain law on four nodes matches the encoding oracle") {
    constexpr int reps = 1000000;
    std::map<std::vector<std::uint32_t>, double> expected;
    for (const auto& [t, count] : harris_trees(4)) expected[t.shape_key()] = count / 6.0;
    std::map<std::vector<std::uint32_t>, int> seen;
    CounterRng rng(2024);
    for (int r = 0; r < reps; ++r) ++seen[grow_chain(4, rng).shape_key()];
    REQUIRE(seen.size() == expected.size());
    for (const auto& [key, p] : expected) {
        double freq = static_cast<double>(seen[key]) / reps;
        double se = std::sqrt(p * (1 - p) / reps);
        CHECK(std::abs(freq - p) < 3 * se);
    }
}

TEST_CASE("uniform_index stays in range and is unbiased") {
    CounterRng rng(7);
    std::vector<int> counts(5);
    for (int i = 0; i < 50000; ++i) {
        auto k = uniform_index(rng, 5);
        REQUIRE(k < 5);
        ++counts[k];
    }
    for (int c : counts) CHECK(std::abs(c - 10000) < 3 * std::sqrt(50000 * 0.2 * 0.8));
}
