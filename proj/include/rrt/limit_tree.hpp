#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rrt/gem.hpp"
#include "rrt/harris_tree.hpp"
#include "rrt/rt_algorithm.hpp"

namespace rrt {

enum class LimitMode {
    unconditional,  //!< every rho(u) is an independent GEM draw
    conditional,    //!< rho(u) ~ GEM(a) with a read off a finite tree
    from_input,     //!< rho(u) read off an RT trace, extended by fresh sticks
};

struct SeriesOptions {
    //! Only words u with |u|_1 <= weight_cut contribute their toll.
    std::uint64_t weight_cut = 24;
    //! Children with index above this carry no mass.
    std::size_t stick_cut = kDefaultStickCut;
    //! Partial sums whose remaining stick mass falls below this are dropped.
    //! Zero disables the pruning.
    double mass_floor = 1e-4;
};

//! One draw of the truncated limit series.
struct SeriesValues {
    double y = 0.0;  //!< sum of X(A_u) C(rho(u))
    double z = 0.0;  //!< sum of X(A_u) D(rho(u))
    double w = 0.0;  //!< sum of X(A_u)^2
};

//---------------------------------------------------------------------------//
/*!
 * \brief Lazily materialized random limit measure on the word space.
 *
 * The measure is described by its stick fractions: rho(u) is the
 * stick-breaking image of (stick(u,1), stick(u,2), ...), and the mass of the
 * cylinder below u is the product of rho along the path to u. Every stick
 * fraction is a pure function of (key, u, i) drawn from a counter-based
 * stream, so queries can be answered in any order and repeated queries give
 * identical values.
 *
 * Series evaluation walks the sticks as a binary tree: the stick (u,i) has
 * remaining mass R = X(A_u) * prod_{j<i}(1 - stick(u,j)); its "down" child is
 * the first stick of ui (with mass R*stick) and its "right" child is (u,i+1)
 * (with mass R*(1-stick)). Writing C(rho) = sum_i R_{i-1} G(stick_i) and
 * D(rho) = sum_i R_{i-1} (1 - 2 stick_i), every series term becomes a
 * local contribution of one stick.
 */
class LimitTree {
  public:
    static LimitTree unconditional(std::uint64_t key, std::size_t stick_cut = kDefaultStickCut);
    static LimitTree conditional(const HarrisTree& x, std::uint64_t key,
                                 std::size_t stick_cut = kDefaultStickCut);
    static LimitTree from_input(const RtTrace& trace, std::uint64_t key,
                                std::size_t stick_cut = kDefaultStickCut);

    LimitMode mode() const { return mode_; }
    std::size_t stick_cut() const { return stick_cut_; }

    //! The i-th stick fraction of rho(u), i >= 1.
    double stick(const Word& u, std::size_t i) const;
    //! GEM parameter word used for rho(u).
    GemParams params(const Word& u) const;
    //! rho(u) with stick_cut masses, computed without caching.
    SimplexVec materialize(const Word& u) const;
    //! rho(u), cached in the node store; throws after freeze() for new words.
    const SimplexVec& rho(const Word& u);
    void freeze() { frozen_ = true; }
    std::size_t materialized_count() const { return store_.size(); }

    //! X(A_u); zero when a letter exceeds stick_cut.
    double mass(const Word& u) const;

    //! Truncated Y, Z and W series in one traversal.
    SeriesValues series(const SeriesOptions& options) const;
    //! The same sums evaluated term by term over all words of weight <= cut,
    //! using materialized rho(u) and the tolls directly. Exponential in cut.
    SeriesValues series_direct(std::uint64_t weight_cut) const;

  private:
    struct Site {
        std::uint64_t key;
        HarrisTree::NodeId node;
    };

    LimitTree(LimitMode mode, std::uint64_t key, std::size_t stick_cut);

    Site root_site() const { return {root_key_, 0}; }
    Site child_site(const Site& s, Letter i) const;
    Site site_of(const Word& u) const;
    double stick(const Site& s, std::size_t i) const;
    void visit(const Site& s, std::uint64_t weight, double mass, const SeriesOptions& options,
               SeriesValues& acc) const;

    LimitMode mode_;
    std::uint64_t root_key_;
    std::size_t stick_cut_;

    // Conditioning structure, indexed by node id of the finite tree.
    HarrisTree tree_;
    std::vector<GemParams> params_;              // conditional mode
    std::vector<std::vector<double>> observed_;  // from_input mode: known fractions

    std::map<Word, SimplexVec> store_;
    bool frozen_ = false;
};

//! E[Y | X_n = x] = TPL(x)/n + 1 - H_n.
double y_projection(const HarrisTree& x);
//! E[Z | X_n = x] = -TPL(x)/n + HPL(x)/n + (n-1)/n.
double z_projection(const HarrisTree& x);
//! E[W | X_n = x] = (n + TPL(x) + sum #x(u)^2) / (n(n+1)) + 2/(n+1).
double w_projection(const HarrisTree& x);

//! u y1 + (1-u) y2 + G(u).
double fixed_point_rhs(double y1, double y2, double u);
//! u y1 + (1-u) y2 + G~(u), the horizontal analogue.
double fixed_point_rhs_tilde(double y1, double y2, double u);

}  // namespace rrt
