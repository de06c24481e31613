#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rrt {

using Int128 = __int128;

std::string to_string(Int128 value);

/// Exact rational with 128-bit numerator and denominator, always normalized
/// (positive denominator, lowest terms). Enough headroom for the enumeration
/// sizes used here (denominators up to 8! times small functional ranges).
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(Int128 num) : num_(num), den_(1) {}  // NOLINT
    Rational(Int128 num, Int128 den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        normalize();
    }

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int128 g = gcd(a.den_, b.den_);
        return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num_, b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int128 g1 = gcd(a.num_, b.den_);
        Int128 g2 = gcd(b.num_, a.den_);
        return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) {
            throw std::domain_error("rational division by zero");
        }
        return a * Rational(b.den_, b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int128 lhs = a.num_ * b.den_;
        Int128 rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    static Int128 gcd(Int128 a, Int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int128 g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int128 num_ = 0;
    Int128 den_ = 1;
};

}  // namespace rrt
