#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rrt/random.hpp"
#include "rrt/rational.hpp"

namespace rrt {

inline constexpr std::size_t kDefaultStickCut = 64;
//! Tolls refuse simplex points whose unmaterialized mass exceeds this.
inline constexpr double kTollResidualLimit = 1e-8;

//! Parameter word of GEM(a); empty means the standard GEM law.
class GemParams {
  public:
    GemParams() = default;
    GemParams(std::initializer_list<std::uint32_t> a);
    explicit GemParams(std::vector<std::uint32_t> a);

    std::span<const std::uint32_t> a() const { return a_; }
    std::size_t k() const { return a_.size(); }
    bool standard() const { return a_.empty(); }
    //! Sum of entries.
    std::uint64_t b() const;

    //! Beta parameters (alpha, beta) of the i-th stick fraction, i >= 1.
    std::pair<std::uint64_t, std::uint64_t> stick_law(std::size_t i) const;

  private:
    std::vector<std::uint32_t> a_;
    std::vector<std::uint64_t> suffix_;  // suffix_[i] = a_i + ... + a_k (0-based)
};

//! Finite prefix of a point of the infinite simplex plus the mass not materialized.
struct SimplexVec {
    std::vector<double> masses;
    double residual = 1.0;
};

//! Beta(alpha, beta) for integer parameters: the alpha-th smallest of
//! alpha + beta - 1 independent uniforms.
template<class UniformSource>
double beta_from_uniforms(std::uint64_t alpha, std::uint64_t beta, UniformSource&& next);

double sample_beta_int(std::uint64_t alpha, std::uint64_t beta, CounterRng& rng);

//! Forward stick-breaking map: fractions -> masses, residual = prod(1 - fraction).
SimplexVec stick_to_simplex(std::span<const double> fractions);
//! Inverse stick-breaking map; throws std::domain_error on a vanishing remainder.
std::vector<double> inverse_stick(const SimplexVec& s);

//! First K masses of a GEM(a) draw.
SimplexVec sample_gem(const GemParams& a, std::size_t sticks, CounterRng& rng);

//! C(s) = 1 + sum s_i log s_i over the materialized masses.
double toll_c(const SimplexVec& s);
//! Heuristic bound on the contribution of the residual to C.
double toll_c_tail_bound(const SimplexVec& s);
//! D(s) = -2 + sum i s_i over the materialized masses.
double toll_d(const SimplexVec& s);
double toll_d_tail_bound(const SimplexVec& s);

//! E C(xi) for xi ~ GEM(a).
double expected_c(const GemParams& a);
Rational expected_c_exact(const GemParams& a);
//! E D(xi) for xi ~ GEM(a).
double expected_d(const GemParams& a);
Rational expected_d_exact(const GemParams& a);
//! E(zeta log zeta) for zeta ~ Beta(i, j).
double beta_log_moment(std::uint64_t i, std::uint64_t j);
Rational beta_log_moment_exact(std::uint64_t i, std::uint64_t j);

//! Density of GEM(a) with respect to GEM at s; a must be non-empty.
double martin_kernel(const GemParams& a, const SimplexVec& s);

//! G(u) = u + u log u + (1-u) log(1-u) on (0,1).
double g_toll(double u);
//! G~(u) = 1 - u + u log u + (1-u) log(1-u) on (0,1).
double g_tilde(double u);

//---------------------------------------------------------------------------//
// INLINE DEFINITIONS
//---------------------------------------------------------------------------//
template<class UniformSource>
double beta_from_uniforms(std::uint64_t alpha, std::uint64_t beta, UniformSource&& next) {
    std::uint64_t count = alpha + beta - 1;
    if (count == 1) return next();
    std::vector<double> u(count);
    for (auto& v : u) v = next();
    auto kth = u.begin() + static_cast<std::ptrdiff_t>(alpha - 1);
    std::nth_element(u.begin(), kth, u.end());
    return *kth;
}

}  // namespace rrt
