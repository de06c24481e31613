#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rrt/harris_tree.hpp"
#include "rrt/rational.hpp"

namespace rrt {

//! Raised for inputs the RT algorithm cannot process (ties, values outside (0,1)).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

//! Insertion bookkeeping for one node of an RT-grown tree.
struct RtRecord {
    std::size_t tau = 0;    //!< input index whose value created the node (0 for the root)
    std::size_t kappa = 0;  //!< rank of that value among the first tau inputs
    double label = 0.0;     //!< the input value itself
    double upper = 1.0;     //!< next larger input value at insertion time (1 if none)
};

//---------------------------------------------------------------------------//
/*!
 * \brief Labelled tree produced by the recursive tree (RT) algorithm.
 *
 * Each new value is attached as the youngest child of the node carrying the
 * largest smaller label; the root carries label 0. The node created by input
 * t_n owns the interval (t_n, next larger input at time n), whose length is
 * the limit of the relative subtree size of that node.
 */
class RtTrace {
  public:
    RtTrace();

    //! Consume the next input value.
    void push(double value);

    const HarrisTree& tree() const { return tree_; }
    std::size_t inputs_consumed() const { return records_.size() - 1; }

    const RtRecord& record(HarrisTree::NodeId id) const { return records_[id]; }
    //! Throws InputError when u has not been inserted.
    const RtRecord& record(const Word& u) const;

    //! Sorted inputs t_(n:1) < ... < t_(n:n) consumed so far.
    std::vector<double> order_stats() const;

    //! Structural comparison cost: depth plus horizontal displacement of every
    //! inserted node, i.e. TPL + HPL of the current tree.
    std::uint64_t comparisons_structural() const { return structural_; }
    //! Label comparisons performed by the binary search over sorted labels.
    std::uint64_t comparisons_search() const { return search_; }

  private:
    struct Slot {
        double label;
        HarrisTree::NodeId node;
        std::size_t input_index;
    };

    HarrisTree tree_;
    std::vector<RtRecord> records_;
    std::vector<Slot> sorted_;  // includes the root's label 0 at the front
    std::uint64_t structural_ = 0;
    std::uint64_t search_ = 0;
};

//! Run RT on the first n-1 values of t, producing a tree with n nodes.
RtTrace rt_build(std::span<const double> t, std::size_t n);

//! Exact limit of #x_n(u)/n for this input: the length of the node's interval.
double limit_mass(const RtTrace& trace, const Word& u);

//! #x_n(u)/n for the tree grown from the first n-1 inputs.
Rational empirical_mass(std::span<const double> t, const Word& u, std::size_t n);

struct SplitInput {
    double eta1;
    std::vector<double> flat;   //!< values above eta1, rescaled to (0,1)
    std::vector<double> sharp;  //!< values below eta1, rescaled to (0,1)
};

//! Split an input sequence around its first value, preserving order.
SplitInput split_input(std::span<const double> t);

}  // namespace rrt
