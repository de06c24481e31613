#include "rrt/harris_tree.hpp"

#include <algorithm>
#include <set>

namespace rrt {

std::optional<ValidationError> validate(std::span<const Word> words) {
    if (words.empty()) {
        return ValidationError{Word{}, HarrisProperty::empty, "tree has no nodes"};
    }
    std::set<Word> nodes(words.begin(), words.end());
    for (const Word& u : nodes) {
        if (u.empty()) continue;
        Word up = u.parent();
        if (!nodes.count(up)) {
            return ValidationError{u, HarrisProperty::prefix_closed,
                                   "H1 violated at " + to_string(u) + ": prefix "
                                       + to_string(up) + " missing"};
        }
        if (u.back() > 1) {
            Word elder = pred(u);
            if (!nodes.count(elder)) {
                return ValidationError{u, HarrisProperty::sibling_closed,
                                       "H2 violated at " + to_string(u) + ": elder sibling "
                                           + to_string(elder) + " missing"};
            }
        }
    }
    return std::nullopt;
}

HarrisTree::HarrisTree() : parent_{npos}, letter_{0}, depth_{0}, weight_{0}, children_(1) {}

HarrisTree HarrisTree::from_words(std::span<const Word> words) {
    if (auto err = validate(words)) {
        throw InvalidTree(*err);
    }
    // Canonical order inserts parents before children and elder siblings
    // before younger ones, so each word lands at its own letter.
    std::set<Word> nodes(words.begin(), words.end());
    HarrisTree x;
    for (const Word& u : nodes) {
        if (u.empty()) continue;
        NodeId p = x.find(u.parent());
        x.grow(p);
    }
    return x;
}

HarrisTree::NodeId HarrisTree::find(const Word& u) const {
    NodeId id = 0;
    for (Letter l : u.letters()) {
        const auto& ch = children_[id];
        if (l > ch.size()) return npos;
        id = ch[l - 1];
    }
    return id;
}

Word HarrisTree::word(NodeId id) const {
    std::vector<Letter> l(depth_[id]);
    for (NodeId v = id; v != 0; v = parent_[v]) {
        l[depth_[v] - 1] = letter_[v];
    }
    return Word(std::move(l));
}

std::vector<Word> HarrisTree::words() const {
    std::vector<Word> out;
    out.reserve(size());
    for (NodeId id = 0; id < size(); ++id) out.push_back(word(id));
    return out;
}

std::size_t HarrisTree::child_count(const Word& u) const {
    NodeId id = find(u);
    return id == npos ? 0 : children_[id].size();
}

std::vector<std::uint32_t> HarrisTree::subtree_sizes() const {
    std::vector<std::uint32_t> sizes(size(), 1);
    for (NodeId id = static_cast<NodeId>(size()); id-- > 1;) {
        sizes[parent_[id]] += sizes[id];
    }
    return sizes;
}

std::size_t HarrisTree::subtree_size(const Word& u) const {
    NodeId id = find(u);
    if (id == npos) return 0;
    std::size_t count = 0;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        ++count;
        stack.insert(stack.end(), children_[v].begin(), children_[v].end());
    }
    return count;
}

HarrisTree HarrisTree::insert_child(const Word& u) const {
    NodeId id = find(u);
    if (id == npos) {
        throw std::invalid_argument("insert_child: " + to_string(u) + " is not in the tree");
    }
    HarrisTree result = *this;
    result.grow(id);
    return result;
}

HarrisTree::NodeId HarrisTree::grow(NodeId parent) {
    auto id = static_cast<NodeId>(size());
    auto letter = static_cast<Letter>(children_[parent].size() + 1);
    parent_.push_back(parent);
    letter_.push_back(letter);
    depth_.push_back(depth_[parent] + 1);
    weight_.push_back(weight_[parent] + letter);
    children_.emplace_back();
    children_[parent].push_back(id);
    return id;
}

namespace {
void copy_below(const HarrisTree& src, HarrisTree::NodeId from, HarrisTree& dst,
                HarrisTree::NodeId to) {
    for (auto c : src.children(from)) {
        copy_below(src, c, dst, dst.grow(to));
    }
}
}  // namespace

HarrisTree HarrisTree::subtree(const Word& u) const {
    NodeId id = find(u);
    if (id == npos) {
        throw std::invalid_argument("subtree: " + to_string(u) + " is not in the tree");
    }
    HarrisTree result;
    copy_below(*this, id, result, 0);
    return result;
}

std::vector<std::uint32_t> HarrisTree::shape_key() const {
    std::vector<std::uint32_t> key;
    key.reserve(size());
    std::vector<NodeId> stack{0};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        key.push_back(static_cast<std::uint32_t>(children_[v].size()));
        stack.insert(stack.end(), children_[v].rbegin(), children_[v].rend());
    }
    return key;
}

std::string HarrisTree::to_json() const {
    auto ws = words();
    std::sort(ws.begin(), ws.end());
    std::string out = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i != 0) out += ',';
        out += '"' + to_string(ws[i]) + '"';
    }
    return out + "]";
}

bool is_valid_encoding(std::span<const std::uint32_t> e) {
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] < 1 || e[k] > k + 1) return false;
    }
    return true;
}

std::vector<HarrisTree> successors(const HarrisTree& x) {
    std::vector<HarrisTree> out;
    out.reserve(x.size());
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        HarrisTree next = x;
        next.grow(id);
        out.push_back(std::move(next));
    }
    return out;
}

HarrisTree psi(std::span<const std::uint32_t> e) {
    if (!is_valid_encoding(e)) {
        throw std::invalid_argument("psi: encoding entries must satisfy 1 <= j_k <= k");
    }
    // Node with recursive label j has id j-1; new nodes become the youngest child.
    HarrisTree x;
    for (std::uint32_t j : e) x.grow(j - 1);
    return x;
}

Decomposition decompose(const HarrisTree& x) {
    if (x.size() < 2) {
        throw std::invalid_argument("decompose: tree needs at least two nodes");
    }
    auto root_children = x.children(0);
    HarrisTree flat;
    copy_below(x, root_children[0], flat, 0);
    HarrisTree sharp;
    for (std::size_t i = 1; i < root_children.size(); ++i) {
        copy_below(x, root_children[i], sharp, sharp.grow(0));
    }
    std::size_t k = flat.size();
    return {k, std::move(flat), std::move(sharp)};
}

HarrisTree t_tree(const HarrisTree& x) {
    std::vector<Word> image;
    image.reserve(x.size());
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        image.push_back(t_map(x.word(id)));
    }
    return HarrisTree::from_words(image);
}

std::uint64_t uniform_index(CounterRng& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

HarrisTree grow_chain(std::size_t n, CounterRng& rng, std::vector<HarrisTree>* path) {
    if (n < 1) {
        throw std::invalid_argument("grow_chain: n must be positive");
    }
    HarrisTree x;
    if (path) {
        path->clear();
        path->push_back(x);
    }
    while (x.size() < n) {
        x.grow(static_cast<HarrisTree::NodeId>(uniform_index(rng, x.size())));
        if (path) path->push_back(x);
    }
    return x;
}

}  // namespace rrt
