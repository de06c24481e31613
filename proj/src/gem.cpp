#include "rrt/gem.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rrt/functionals.hpp"

namespace rrt {

GemParams::GemParams(std::initializer_list<std::uint32_t> a)
    : GemParams(std::vector<std::uint32_t>(a)) {}

GemParams::GemParams(std::vector<std::uint32_t> a) : a_(std::move(a)), suffix_(a_.size() + 1, 0) {
    for (std::size_t i = a_.size(); i-- > 0;) {
        if (a_[i] == 0) {
            throw std::invalid_argument("GEM parameters must be positive");
        }
        suffix_[i] = suffix_[i + 1] + a_[i];
    }
}

std::uint64_t GemParams::b() const { return suffix_.empty() ? 0 : suffix_[0]; }

std::pair<std::uint64_t, std::uint64_t> GemParams::stick_law(std::size_t i) const {
    if (i == 0) {
        throw std::invalid_argument("stick indices start at 1");
    }
    if (i > a_.size()) return {1, 1};
    return {a_[i - 1], 1 + suffix_[i]};
}

double sample_beta_int(std::uint64_t alpha, std::uint64_t beta, CounterRng& rng) {
    if (alpha < 1 || beta < 1) {
        throw std::invalid_argument("beta parameters must be positive integers");
    }
    return beta_from_uniforms(alpha, beta, [&rng] { return rng.uniform(); });
}

SimplexVec stick_to_simplex(std::span<const double> fractions) {
    SimplexVec s;
    s.masses.reserve(fractions.size());
    double remaining = 1.0;
    for (double z : fractions) {
        s.masses.push_back(z * remaining);
        remaining *= 1.0 - z;
    }
    s.residual = remaining;
    return s;
}

std::vector<double> inverse_stick(const SimplexVec& s) {
    std::size_t k = s.masses.size();
    // Remainders from the tail keep relative precision for small masses.
    std::vector<double> remainder(k + 1);
    remainder[k] = s.residual;
    for (std::size_t i = k; i-- > 0;) remainder[i] = remainder[i + 1] + s.masses[i];
    std::vector<double> t(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(remainder[i] > 0.0)) {
            throw std::domain_error("inverse_stick: remainder vanishes before stick "
                                    + std::to_string(i + 1));
        }
        t[i] = s.masses[i] / remainder[i];
    }
    return t;
}

SimplexVec sample_gem(const GemParams& a, std::size_t sticks, CounterRng& rng) {
    if (sticks < a.k()) {
        throw std::invalid_argument("sample_gem: truncation depth below parameter length");
    }
    std::vector<double> z(sticks);
    for (std::size_t i = 1; i <= sticks; ++i) {
        auto [alpha, beta] = a.stick_law(i);
        z[i - 1] = sample_beta_int(alpha, beta, rng);
    }
    return stick_to_simplex(z);
}

namespace {
void check_residual(const SimplexVec& s, const char* what) {
    if (s.residual > kTollResidualLimit) {
        throw std::domain_error(std::string(what) + ": residual mass "
                                + std::to_string(s.residual) + " exceeds truncation tolerance");
    }
}
}  // namespace

double toll_c(const SimplexVec& s) {
    check_residual(s, "toll_c");
    double sum = 1.0;
    for (double m : s.masses) {
        if (m > 0.0) sum += m * std::log(m);
    }
    return sum;
}

double toll_c_tail_bound(const SimplexVec& s) {
    if (s.residual <= 0.0 || s.masses.empty()) return 0.0;
    return s.residual * std::abs(std::log(s.residual / static_cast<double>(s.masses.size())));
}

double toll_d(const SimplexVec& s) {
    check_residual(s, "toll_d");
    double sum = -2.0;
    for (std::size_t i = 0; i < s.masses.size(); ++i) {
        sum += static_cast<double>(i + 1) * s.masses[i];
    }
    return sum;
}

double toll_d_tail_bound(const SimplexVec& s) {
    return s.residual * static_cast<double>(s.masses.size() + 2);
}

Rational expected_c_exact(const GemParams& a) {
    if (a.standard()) return Rational(0);
    auto b = static_cast<Int128>(a.b());
    Rational weighted(0);
    for (auto ai : a.a()) weighted += Rational(ai) * harmonic_exact(ai);
    return Rational(1) + weighted / Rational(1 + b) - harmonic_exact(static_cast<std::uint64_t>(1 + b));
}

double expected_c(const GemParams& a) {
    if (a.standard()) return 0.0;
    double b = static_cast<double>(a.b());
    double weighted = 0.0;
    for (auto ai : a.a()) weighted += ai * harmonic(ai);
    return 1.0 + weighted / (1.0 + b) - harmonic(a.b() + 1);
}

Rational expected_d_exact(const GemParams& a) {
    if (a.standard()) return Rational(0);
    Int128 indexed = 0;
    for (std::size_t i = 0; i < a.k(); ++i) indexed += static_cast<Int128>(i + 1) * a.a()[i];
    auto k = static_cast<Int128>(a.k());
    auto b = static_cast<Int128>(a.b());
    return Rational(-2) + Rational(indexed + k + 2, 1 + b);
}

double expected_d(const GemParams& a) { return expected_d_exact(a).to_double(); }

Rational beta_log_moment_exact(std::uint64_t i, std::uint64_t j) {
    if (i < 1 || j < 1) {
        throw std::invalid_argument("beta parameters must be positive integers");
    }
    return Rational(static_cast<Int128>(i), static_cast<Int128>(i + j))
           * (harmonic_exact(i) - harmonic_exact(i + j));
}

double beta_log_moment(std::uint64_t i, std::uint64_t j) {
    if (i < 1 || j < 1) {
        throw std::invalid_argument("beta parameters must be positive integers");
    }
    double di = static_cast<double>(i);
    double dj = static_cast<double>(j);
    return di / (di + dj) * (harmonic(i) - harmonic(i + j));
}

double martin_kernel(const GemParams& a, const SimplexVec& s) {
    if (a.standard()) {
        throw std::invalid_argument("martin_kernel: parameter word must be non-empty");
    }
    std::size_t k = a.k();
    if (s.masses.size() < k) {
        throw std::invalid_argument("martin_kernel: simplex point shorter than parameter word");
    }
    double log_coeff = std::lgamma(static_cast<double>(a.b()) + 1.0);
    for (auto ai : a.a()) log_coeff -= std::lgamma(static_cast<double>(ai));
    double value = std::exp(log_coeff);
    double partial = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        auto ai = a.a()[i];
        if (ai > 1) value *= std::pow(s.masses[i], static_cast<double>(ai - 1));
        partial += s.masses[i];
        if (i + 1 < k) value *= 1.0 - partial;
    }
    return value;
}

namespace {
void check_open(double u, const char* what) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error(std::string(what) + ": argument must lie in (0,1)");
    }
}
}  // namespace

double g_toll(double u) {
    check_open(u, "g_toll");
    return u + u * std::log(u) + (1.0 - u) * std::log1p(-u);
}

double g_tilde(double u) {
    check_open(u, "g_tilde");
    return 1.0 - u + u * std::log(u) + (1.0 - u) * std::log1p(-u);
}

}  // namespace rrt
