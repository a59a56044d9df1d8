#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "rmlab/errors.hpp"

namespace rmlab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

// Deterministic random stream addressed by (master_seed, stream_id).
//
// The generator is xoshiro256++ seeded through two SplitMix64 chains, one over
// the master seed and one over the stream id, so distinct stream ids give
// statistically independent sequences and the same pair reproduces the same
// sequence. All integer work is exact; the floating-point variate path
// (uniform, Box-Muller Gaussian, inverse-CDF exponential/geometric) is fixed
// and reproduces bit-for-bit on any IEEE-754 platform with the same libm.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_id = 0)
        : master_seed_(master_seed), stream_id_(stream_id) {
        std::uint64_t a = master_seed;
        std::uint64_t b = stream_id ^ 0xD2B74407B1CE6E93ull;
        for (auto& word : state_)
            word = detail::splitmix64(a) ^ detail::splitmix64(b);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 1; // all-zero state is invalid for xoshiro
    }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // xoshiro256++
    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via the trigonometric Box-Muller transform.
    // Consumes two uniforms per pair; the second variate is cached.
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(theta);
        has_cached_ = true;
        return r * std::cos(theta);
    }

    // Unit-mean exponential by inversion.
    double exponential() { return -std::log(uniform()); }

    // Geometric on {0,1,2,...} with P(X = s) = (1-q) q^s, by inversion.
    long long geometric(double q) {
        if (!(q > 0.0 && q < 1.0))
            throw validation_error("geometric: q must lie in (0,1)");
        return static_cast<long long>(std::floor(std::log(uniform()) / std::log(q)));
    }

    // Uniform integer in [0, bound). Modulo bias is negligible for the small
    // bounds used here.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0)
            throw validation_error("uniform_below: bound must be positive");
        return next_u64() % bound;
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace rmlab
