#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rrt/harris_tree.hpp"
#include "rrt/rational.hpp"

namespace rrt {

inline constexpr std::size_t kOracleMinN = 2;
inline constexpr std::size_t kOracleMaxN = 9;

std::uint64_t factorial(std::size_t n);

//---------------------------------------------------------------------------//
/*!
 * \brief Odometer over all recursive-tree encodings with n nodes.
 *
 * Yields the (n-1)! sequences (j_1, ..., j_{n-1}), 1 <= j_k <= k, in
 * lexicographic order, without materializing the list.
 */
class EncodingEnumerator {
  public:
    explicit EncodingEnumerator(std::size_t n);

    const Encoding& current() const { return current_; }
    //! Advance; false once every encoding has been visited.
    bool next();

  private:
    Encoding current_;
};

//! Visit every encoding with n nodes whose last entry is congruent to
//! shard modulo shard_count (all of them for the default arguments).
void for_each_encoding(std::size_t n, const std::function<void(const Encoding&)>& f,
                       std::size_t shard = 0, std::size_t shard_count = 1);

enum class Functional { tpl, hpl, wiener, tpl_plus_hpl };

std::string to_string(Functional f);
Functional parse_functional(const std::string& name);

//! Law of an integer functional of X_n as counts over the (n-1)! encodings.
struct ExactDist {
    std::size_t n = 0;
    std::map<std::int64_t, std::uint64_t> counts;

    std::uint64_t total() const { return factorial(n - 1); }
    Rational weight(std::int64_t value) const;
    Rational mean() const;
    //! Law of value + offset.
    ExactDist shifted(std::int64_t offset) const;
    friend bool operator==(const ExactDist&, const ExactDist&) = default;
};

ExactDist exact_dist(Functional f, std::size_t n, unsigned threads = 1);

//! Counts of (TPL, HPL) pairs over all encodings.
using JointTable = std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t>;
JointTable joint_table(std::size_t n, unsigned threads = 1);

//! Law of X_n as counts keyed by the canonical JSON word list; n >= 1.
std::map<std::string, std::uint64_t> tree_law(std::size_t n);

//! Joint law of (K, flat part, sharp part) of X_n.
struct DecompositionLaw {
    std::size_t n = 0;
    std::map<std::tuple<std::size_t, std::string, std::string>, std::uint64_t> joint;
    std::map<std::size_t, std::uint64_t> k_counts;

    //! K uniform on {1, ..., n-1}, checked exactly.
    bool k_uniform() const;
    //! P(K=k, flat=f, sharp=s) == P(K=k) P(X_k=f) P(X_{n-k}=s) for every
    //! (k, f, s) in the product of supports, checked exactly.
    bool factorizes() const;
};

DecompositionLaw decomposition_law(std::size_t n);

//! The distinct elements of the tree space with n nodes, in canonical JSON
//! order, each paired with its number of preimage encodings.
std::vector<std::pair<HarrisTree, std::uint64_t>> harris_trees(std::size_t n);

}  // namespace rrt
