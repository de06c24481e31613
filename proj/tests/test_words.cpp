#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rrt/word.hpp"

using namespace rrt;
using Letters = std::vector<Letter>;

namespace {

// The involution straight from its recursive definition: T(()) = (),
// T((1)) = (1), T(u 1) bumps the last letter of T(u), and T(u (k+1))
// appends a 1 to T(u k).
Letters t_recursive(const Letters& u) {
    if (u.empty()) return {};
    if (u == Letters{1}) return {1};
    if (u.back() == 1) {
        Letters v = t_recursive(Letters(u.begin(), u.end() - 1));
        ++v.back();
        return v;
    }
    Letters prev = u;
    --prev.back();
    Letters v = t_recursive(prev);
    v.push_back(1);
    return v;
}

// All compositions of w into positive parts.
void compositions(std::uint64_t w, Letters& prefix, std::vector<Letters>& out) {
    if (w == 0) {
        out.push_back(prefix);
        return;
    }
    for (Letter k = 1; k <= w; ++k) {
        prefix.push_back(k);
        compositions(w - k, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Letters> all_of_weight(std::uint64_t w) {
    std::vector<Letters> out;
    Letters prefix;
    compositions(w, prefix, out);
    return out;
}

}  // namespace

TEST_CASE("depth and weight") {
    CHECK(depth(Word{}) == 0);
    CHECK(depth(Word{2, 2}) == 2);
    CHECK(depth(Word{3, 1, 2}) == 3);
    CHECK(weight(Word{}) == 0);
    CHECK(weight(Word{2, 2}) == 4);
    CHECK(weight(Word{1, 1, 1}) == 3);
}

TEST_CASE("letters are positive") {
    CHECK_THROWS_AS(Word({1, 0}), std::invalid_argument);
}

TEST_CASE("meet is the longest common prefix") {
    CHECK(meet(Word{1, 2}, Word{1, 3}) == Word{1});
    CHECK(meet(Word{2, 2}, Word{}) == Word{});
    CHECK(meet(Word{1, 2, 1}, Word{1, 2, 1}) == Word{1, 2, 1});
    CHECK(meet(Word{1, 2, 1}, Word{1, 2}) == Word{1, 2});
}

TEST_CASE("prefix order") {
    CHECK(Word{}.is_prefix_of(Word{3}));
    CHECK(Word{1}.is_prefix_of(Word{1, 4}));
    CHECK_FALSE(Word{2}.is_prefix_of(Word{1, 2}));
    CHECK_FALSE(Word{1, 1}.is_prefix_of(Word{1}));
}

TEST_CASE("flat and sharp words") {
    CHECK(flat_word(Word{2, 1}) == Word{1, 2, 1});
    CHECK(sharp_word(Word{2, 1}) == Word{3, 1});
    CHECK(sharp_word(Word{}) == Word{});
    CHECK(flat_word(Word{}) == Word{1});
}

TEST_CASE("pred") {
    CHECK(pred(Word{1, 2, 1}) == Word{1, 2});
    CHECK(pred(Word{1, 2}) == Word{1, 1});
    CHECK(pred(Word{1}) == Word{});
    CHECK_THROWS_AS(pred(Word{}), std::invalid_argument);

    for (std::uint64_t w = 1; w <= 10; ++w) {
        for (const auto& letters : all_of_weight(w)) {
            Word u(letters);
            std::uint64_t steps = 0;
            while (!u.empty()) {
                u = pred(u);
                ++steps;
            }
            REQUIRE(steps == w);
        }
    }
}

TEST_CASE("t_map examples") {
    CHECK(t_map(Word{}) == Word{});
    CHECK(t_map(Word{1}) == Word{1});
    CHECK(t_map(Word{1, 1}) == Word{2});
    CHECK(t_map(Word{2}) == Word{1, 1});
    CHECK(t_map(Word{2, 1}) == Word{1, 2});
}

TEST_CASE("t_map agrees with the recursive definition up to weight 10") {
    std::size_t checked = 0;
    for (std::uint64_t w = 0; w <= 10; ++w) {
        for (const auto& letters : all_of_weight(w)) {
            Word u(letters);
            Word tu = t_map(u);
            REQUIRE(tu == Word(t_recursive(letters)));
            REQUIRE(t_map(tu) == u);
            if (!u.empty()) {
                REQUIRE(weight(tu) - depth(tu) == depth(u) - 1);
            }
            ++checked;
        }
    }
    CHECK(checked == 1024);  // 1 + sum_{w=1}^{10} 2^{w-1}
}

TEST_CASE("words_of_weight enumerates every composition once") {
    for (std::uint64_t w = 0; w <= 12; ++w) {
        auto words = words_of_weight(w);
        std::set<Word> got(words.begin(), words.end());
        std::set<Word> expected;
        for (const auto& l : all_of_weight(w)) expected.insert(Word(l));
        CHECK(words.size() == got.size());
        CHECK(got == expected);
        CHECK(words.size() == (w == 0 ? 1u : (1u << (w - 1))));
    }
}

TEST_CASE("text rendering") {
    CHECK(to_string(Word{}) == "()");
    CHECK(to_string(Word{1, 2, 3}) == "(1,2,3)");
    CHECK(parse_word("()") == Word{});
    CHECK(parse_word(" (1, 2,3) ") == Word{1, 2, 3});
    CHECK_THROWS_AS(parse_word("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(1,0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(1,,2)"), std::invalid_argument);
}

TEST_CASE("ordering is by length, then letters") {
    CHECK(Word{5} < Word{1, 1});
    CHECK(Word{1, 2} < Word{2, 1});
    CHECK(Word{} < Word{1});
    CHECK(WordHash{}(Word{1, 2}) == WordHash{}(Word{1, 2}));
}
