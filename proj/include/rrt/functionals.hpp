#pragma once

#include <cstdint>
#include <string>

#include "rrt/harris_tree.hpp"
#include "rrt/rational.hpp"

namespace rrt {

//! Total (vertical) path length: sum of node depths.
std::int64_t tpl(const HarrisTree& x);
//! Horizontal path length: sum of (weight - depth) over nodes.
std::int64_t hpl(const HarrisTree& x);
//! Sum of subtree sizes squared.
std::int64_t subtree_size_square_sum(const HarrisTree& x);

//! Wiener index from all ordered pairs; O(n^2 depth), limited to n <= 2000.
std::int64_t wiener_pairwise(const HarrisTree& x);
//! Wiener index from subtree sizes: n TPL + n^2 - sum #x(u)^2.
std::int64_t wiener_subtree(const HarrisTree& x);

inline constexpr std::size_t kWienerPairwiseLimit = 2000;

enum class HarmonicZero {
    zero,  //!< H_0 = 0, the default
    one,   //!< H_0 = 1, the path-length literature convention
};

//! Exact H_n; n <= 30 keeps the denominator well inside 128 bits.
Rational harmonic_exact(std::uint64_t n, HarmonicZero h0 = HarmonicZero::zero);
//! H_n in double precision.
double harmonic(std::uint64_t n, HarmonicZero h0 = HarmonicZero::zero);

struct FunctionalRecord {
    std::size_t n = 0;
    std::int64_t tpl = 0;
    std::int64_t hpl = 0;
    std::int64_t wiener = 0;
    std::int64_t comparisons = 0;  //!< tpl + hpl
};

FunctionalRecord functional_record(const HarrisTree& x);
//! "n,tpl,hpl,wiener,comparisons"
std::string to_csv_row(const FunctionalRecord& r);

}  // namespace rrt
