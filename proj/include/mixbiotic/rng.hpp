#ifndef MIXBIOTIC_RNG_HPP
#define MIXBIOTIC_RNG_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace mixbiotic {

/// SplitMix64 finalizer. Used for seeding and for deriving child seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic 64-bit mix of a seed with up to two indices. The same
/// (seed, a, b) always yields the same value on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// xoshiro256** (Blackman & Vigna), state expanded from a 64-bit seed with
/// SplitMix64. All derived draws below are integer-exact so that sequences
/// reproduce bit-for-bit across compilers and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform integer in [0, bound). Rejection sampling on the top bits
    /// (Lemire's multiply-shift with threshold), bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01();

    /// Bernoulli draw with success probability p.
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::array<std::uint64_t, 4> s_;
};

/// Draws `count` distinct elements of `pool` uniformly without replacement.
/// Partial Fisher-Yates over a copy of the pool: draw i swaps position i with
/// i + uniform_below(size - i). Result order is draw order.
std::vector<int> sample_without_replacement(std::span<const int> pool, std::size_t count, Rng& rng);

/// Same as above over the range 0..n-1.
std::vector<int> sample_range(int n, std::size_t count, Rng& rng);

} // namespace mixbiotic

#endif // MIXBIOTIC_RNG_HPP
