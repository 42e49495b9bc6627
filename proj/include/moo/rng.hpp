#pragma once

#include <cmath>
#include <cstdint>

#include "moo/types.hpp"

namespace moo {

/// Counter-based deterministic random stream (splitmix64). Every consumer
/// opens its own stream from a (seed, stream, index) triple; there is no
/// global generator state anywhere in the library, so runs are reproducible
/// bit for bit regardless of evaluation order across streams.
class Rng {
public:
    explicit Rng(std::uint64_t key) : state_(key) {}

    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : state_(key(seed, stream, index)) {}

    /// Collapses a (seed, stream, index) triple into a well-mixed 64-bit key.
    static std::uint64_t key(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::uint64_t k = mix(seed + 0x9e3779b97f4a7c15ULL);
        k = mix(k ^ mix(stream + 0xbf58476d1ce4e5b9ULL));
        return mix(k ^ mix(index + 0x94d049bb133111ebULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double normal() {
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        const double u2 = uniform();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Vector of i.i.d. standard normals drawn from the stream.
inline VectorXd normal_vector(Rng& rng, Index n) {
    VectorXd v(n);
    for (Index i = 0; i < n; ++i) v[i] = rng.normal();
    return v;
}

}  // namespace moo
