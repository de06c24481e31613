#include "rrt/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rrt/rational.hpp"

namespace rrt {

std::string to_string(Int128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                     : static_cast<unsigned __int128>(value);
    std::string out;
    while (mag != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (std::find(letters_.begin(), letters_.end(), Letter{0}) != letters_.end()) {
        throw std::invalid_argument("word letters must be positive");
    }
}

Word Word::child(Letter i) const {
    if (i == 0) {
        throw std::invalid_argument("word letters must be positive");
    }
    Word result = *this;
    result.letters_.push_back(i);
    return result;
}

Word Word::parent() const {
    Word result = *this;
    if (!result.letters_.empty()) result.letters_.pop_back();
    return result;
}

bool Word::is_prefix_of(const Word& other) const {
    return letters_.size() <= other.letters_.size()
           && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
}

std::size_t depth(const Word& u) { return u.size(); }

std::uint64_t weight(const Word& u) {
    auto l = u.letters();
    return std::accumulate(l.begin(), l.end(), std::uint64_t{0});
}

Word meet(const Word& u, const Word& v) {
    auto a = u.letters();
    auto b = v.letters();
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return Word(std::vector<Letter>(a.begin(), ia));
}

Word flat_word(const Word& u) {
    std::vector<Letter> l{1};
    l.insert(l.end(), u.letters().begin(), u.letters().end());
    return Word(std::move(l));
}

Word sharp_word(const Word& u) {
    if (u.empty()) return u;
    std::vector<Letter> l(u.letters().begin(), u.letters().end());
    ++l.front();
    return Word(std::move(l));
}

Word pred(const Word& u) {
    if (u.empty()) {
        throw std::invalid_argument("pred of the root is undefined");
    }
    std::vector<Letter> l(u.letters().begin(), u.letters().end());
    if (l.back() == 1) {
        l.pop_back();
    } else {
        --l.back();
    }
    return Word(std::move(l));
}

Word t_map(const Word& u) {
    if (u.empty()) return u;
    // Replay the pred chain from the root. The first move (root -> (1)) is a
    // down-move in both u and T(u); every later move has its direction swapped.
    std::vector<Letter> out{1};
    bool first = true;
    for (Letter letter : u.letters()) {
        // One down-move per letter followed by (letter - 1) right-moves.
        if (first) {
            first = false;
        } else {
            ++out.back();  // down becomes right
        }
        for (Letter r = 1; r < letter; ++r) {
            out.push_back(1);  // right becomes down
        }
    }
    return Word(std::move(out));
}

std::string to_string(const Word& u) {
    std::string out = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(u[i]);
    }
    out += ')';
    return out;
}

Word parse_word(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail();
    s = trim(s.substr(1, s.size() - 2));
    std::vector<Letter> letters;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view tok = trim(s.substr(0, comma));
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0) fail();
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
        if (trim(s).empty()) fail();
    }
    return Word(std::move(letters));
}

std::vector<Word> words_of_weight(std::uint64_t w) {
    if (w == 0) return {Word{}};
    std::vector<Word> level{Word{1}};
    for (std::uint64_t k = 2; k <= w; ++k) {
        std::vector<Word> next;
        next.reserve(level.size() * 2);
        for (const Word& u : level) {
            next.push_back(u.child(1));
            std::vector<Letter> l(u.letters().begin(), u.letters().end());
            ++l.back();
            next.emplace_back(std::move(l));
        }
        level = std::move(next);
    }
    return level;
}

std::size_t WordHash::operator()(const Word& u) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ u.size();
    for (Letter l : u.letters()) {
        h ^= l + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace rrt
