#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrt/random.hpp"
#include "rrt/word.hpp"

namespace rrt {

//! Which of the two Harris-tree properties a word set violates.
enum class HarrisProperty {
    empty,              //!< no nodes at all
    prefix_closed,      //!< (H1): a proper prefix is missing
    sibling_closed,     //!< (H2): an elder sibling is missing
};

struct ValidationError {
    Word node;
    HarrisProperty property;
    std::string message;
};

class InvalidTree : public std::invalid_argument {
  public:
    explicit InvalidTree(ValidationError error)
        : std::invalid_argument(error.message), error_(std::move(error)) {}
    const ValidationError& error() const { return error_; }

  private:
    ValidationError error_;
};

//! Check (H1) and (H2) on an arbitrary word set; nullopt when valid.
//! Words are checked in canonical order and the first violation is returned.
std::optional<ValidationError> validate(std::span<const Word> words);

//---------------------------------------------------------------------------//
/*!
 * \brief Finite Harris (Ulam-Harris) tree.
 *
 * Nodes are stored in insertion order; node 0 is the root and every node's
 * parent has a smaller id. The i-th child of a node is children(id)[i-1],
 * which is how sibling-closedness is encoded. Two trees compare equal when
 * their word sets agree, independent of insertion order.
 */
class HarrisTree {
  public:
    using NodeId = std::uint32_t;
    static constexpr NodeId npos = static_cast<NodeId>(-1);

    //! The one-node tree {()}.
    HarrisTree();
    //! Build from a word set; throws InvalidTree when (H1)/(H2) fail.
    static HarrisTree from_words(std::span<const Word> words);

    std::size_t size() const { return parent_.size(); }

    bool contains(const Word& u) const { return find(u) != npos; }
    NodeId find(const Word& u) const;
    Word word(NodeId id) const;
    std::vector<Word> words() const;

    NodeId parent(NodeId id) const { return parent_[id]; }
    Letter letter(NodeId id) const { return letter_[id]; }
    std::uint32_t depth(NodeId id) const { return depth_[id]; }
    std::uint64_t weight(NodeId id) const { return weight_[id]; }
    std::span<const NodeId> children(NodeId id) const { return children_[id]; }
    //! Number of children of u; 0 if u is absent.
    std::size_t child_count(const Word& u) const;

    //! #x(u) for every node, indexed by NodeId.
    std::vector<std::uint32_t> subtree_sizes() const;
    //! #x(u); 0 when u is not in the tree.
    std::size_t subtree_size(const Word& u) const;

    //! New tree with u.(child_count(u)+1) added; throws if u is absent.
    HarrisTree insert_child(const Word& u) const;
    //! In-place growth used by samplers that own their tree.
    NodeId grow(NodeId parent);

    //! Subtree rooted at u, re-rooted so that u becomes ().
    HarrisTree subtree(const Word& u) const;

    //! Preorder child counts; identifies the tree uniquely.
    std::vector<std::uint32_t> shape_key() const;
    //! JSON array of the sorted word strings.
    std::string to_json() const;

    friend bool operator==(const HarrisTree& a, const HarrisTree& b) {
        return a.shape_key() == b.shape_key();
    }

  private:
    std::vector<NodeId> parent_;
    std::vector<Letter> letter_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint64_t> weight_;
    std::vector<std::vector<NodeId>> children_;
};

//! Recursive-tree ancestor sequence (j_1, ..., j_{n-1}) with 1 <= j_k <= k.
using Encoding = std::vector<std::uint32_t>;

bool is_valid_encoding(std::span<const std::uint32_t> e);

//! All trees reachable in one growth step, one per node (in node order).
std::vector<HarrisTree> successors(const HarrisTree& x);

//! Label-forgetting map from a recursive-tree encoding to its Harris tree.
HarrisTree psi(std::span<const std::uint32_t> e);

struct Decomposition {
    std::size_t k;         //!< size of the flat part
    HarrisTree flat;       //!< subtree at (1)
    HarrisTree sharp;      //!< remainder with first letters shifted down
};

//! Split into the subtree at (1) and the shifted rest; needs #x >= 2.
Decomposition decompose(const HarrisTree& x);

//! Nodewise image under t_map.
HarrisTree t_tree(const HarrisTree& x);

//! Harris chain X_n grown by uniform parent choice. When path is non-null
//! it receives X_1, ..., X_n.
HarrisTree grow_chain(std::size_t n, CounterRng& rng, std::vector<HarrisTree>* path = nullptr);

//! Uniform integer in [0, bound) from one 64-bit draw (Lemire's method).
std::uint64_t uniform_index(CounterRng& rng, std::uint64_t bound);

}  // namespace rrt
