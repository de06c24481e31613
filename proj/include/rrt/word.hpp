#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rrt {

using Letter = std::uint32_t;

//---------------------------------------------------------------------------//
/*!
 * A node of the Ulam-Harris universe: a finite sequence of positive integers.
 *
 * The empty word is the root. Appending letter i moves to the i-th child;
 * incrementing the last letter moves to the next younger sibling.
 */
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }
    std::span<const Letter> letters() const { return letters_; }

    //! Word with letter i appended.
    Word child(Letter i) const;
    //! Word with the last letter dropped (root stays root).
    Word parent() const;
    //! Whether this word is a prefix of (or equal to) other.
    bool is_prefix_of(const Word& other) const;

    //! Canonical ordering: by length first, then lexicographically.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

  private:
    std::vector<Letter> letters_;
};

//! Number of letters |u|.
std::size_t depth(const Word& u);
//! Sum of letters |u|_1.
std::uint64_t weight(const Word& u);
//! Longest common prefix.
Word meet(const Word& u, const Word& v);
//! (1, u_1, ..., u_k)
Word flat_word(const Word& u);
//! (1 + u_1, u_2, ..., u_k); identity on the root.
Word sharp_word(const Word& u);
//! Direct predecessor (trailing 1 dropped) or direct elder sibling.
//! Throws std::invalid_argument on the root.
Word pred(const Word& u);
//! Involution swapping down-moves and right-moves along the pred chain.
Word t_map(const Word& u);

//! "(1,2,3)"; "()" for the root.
std::string to_string(const Word& u);
//! Inverse of to_string. Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text);

//! All words of weight exactly w (2^(w-1) of them for w >= 1).
std::vector<Word> words_of_weight(std::uint64_t w);

struct WordHash {
    std::size_t operator()(const Word& u) const noexcept;
};

}  // namespace rrt
