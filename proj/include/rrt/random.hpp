#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rrt {

//---------------------------------------------------------------------------//
/*!
 * \brief Counter-based random stream (Philox4x32-10).
 *
 * A stream is identified by a 64-bit key; its output is a pure function of
 * (key, counter), so any block can be generated without replaying the ones
 * before it. Child streams are keyed by hashing the parent key with an
 * index, which lets replications, tree words and stick indices each own an
 * independent stream regardless of the order in which they are consumed.
 *
 * See Salmon et al., "Parallel random numbers: as easy as 1, 2, 3" (SC11).
 */
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) : key_(key) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    std::uint64_t key() const { return key_; }

    //! Key of the child stream with the given index.
    static std::uint64_t derive(std::uint64_t key, std::uint64_t index) {
        return mix(mix(key ^ 0x6A09E667F3BCC909ull) + index * 0x9E3779B97F4A7C15ull);
    }
    CounterRng split(std::uint64_t index) const { return CounterRng(derive(key_, index)); }

    //! Next 64 random bits.
    result_type operator()() {
        if (buffered_ == 0) {
            block_ = generate(key_, counter_, 0);
            ++counter_;
            buffered_ = 2;
        }
        --buffered_;
        return buffered_ == 1 ? block_[0] : block_[1];
    }

    //! Uniform draw on the open interval (0, 1).
    double uniform() { return to_unit((*this)()); }

    //! Random-access uniform: a pure function of (key, hi, lo).
    static double uniform_at(std::uint64_t key, std::uint64_t hi, std::uint64_t lo) {
        return to_unit(generate(key, lo, hi)[0]);
    }

    //! 53-bit mantissa mapped to the midpoint grid, never 0 or 1.
    static double to_unit(std::uint64_t bits) {
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    //! One Philox4x32-10 block for the 128-bit counter (lo, hi).
    static std::array<std::uint64_t, 2>
    generate(std::uint64_t key, std::uint64_t lo, std::uint64_t hi) {
        std::uint32_t c[4] = {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
                              static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)};
        std::uint32_t k[2] = {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = std::uint64_t{kM0} * c[0];
            std::uint64_t p1 = std::uint64_t{kM1} * c[2];
            std::uint32_t r0 = static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0];
            std::uint32_t r1 = static_cast<std::uint32_t>(p1);
            std::uint32_t r2 = static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1];
            std::uint32_t r3 = static_cast<std::uint32_t>(p0);
            c[0] = r0;
            c[1] = r1;
            c[2] = r2;
            c[3] = r3;
            k[0] += kW0;
            k[1] += kW1;
        }
        return {(std::uint64_t{c[1]} << 32) | c[0], (std::uint64_t{c[3]} << 32) | c[2]};
    }

  private:
    static constexpr std::uint32_t kM0 = 0xD2511F53;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57;
    static constexpr std::uint32_t kW0 = 0x9E3779B9;
    static constexpr std::uint32_t kW1 = 0xBB67AE85;

    // SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 2> block_{};
    int buffered_ = 0;
};

}  // namespace rrt
